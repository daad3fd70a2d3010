#![no_main]

use libfuzzer_sys::fuzz_target;
use monoreg::io::{parse_model, render_model};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(bn) = parse_model(text) {
        let again = parse_model(&render_model(&bn)).expect("rendered model parses");
        assert_eq!(again, bn);
    }
});
