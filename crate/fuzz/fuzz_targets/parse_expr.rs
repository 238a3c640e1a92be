#![no_main]

use bfa_core::boolfn::parse_expr;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&arity, rest)) = data.split_first() else {
        return;
    };
    let Ok(text) = std::str::from_utf8(rest) else {
        return;
    };
    let arity = 1 + usize::from(arity % 8);
    if let Ok(f) = parse_expr(text, arity) {
        let printed = f.to_string();
        let again = parse_expr(&printed, arity).expect("printed expression parses");
        assert_eq!(again, f);
    }
});
