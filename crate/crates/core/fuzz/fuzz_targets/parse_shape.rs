#![no_main]

use libfuzzer_sys::fuzz_target;
use monoreg::function::Shape;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(shape) = text.parse::<Shape>() {
        assert_eq!(shape.to_string().parse::<Shape>().unwrap(), shape);
    }
});
