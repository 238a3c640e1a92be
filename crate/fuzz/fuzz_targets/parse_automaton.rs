#![no_main]

use bfa_core::format::{parse_automaton, print_automaton};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // BFA truth tables grow as 2^states
    let wide = text.lines().any(|l| {
        l.strip_prefix("states:")
            .and_then(|v| v.trim().parse::<usize>().ok())
            .is_some_and(|n| n > 12)
    });
    if wide && text.contains("bfa") {
        return;
    }
    if let Ok(x) = parse_automaton(text) {
        let printed = print_automaton(&x);
        let again = parse_automaton(&printed).expect("printed automaton parses");
        assert_eq!(again, x);
        assert_eq!(print_automaton(&again), printed);
    }
});
