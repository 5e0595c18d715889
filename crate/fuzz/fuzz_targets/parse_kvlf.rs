#![no_main]

use kvlogic::format::{parse, serialize};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(f) = parse(data) {
        let text = serialize(&f);
        let again = parse(text.as_bytes()).expect("serialized table parses");
        assert_eq!(again, f);
        assert_eq!(serialize(&again), text);
    }
});
