#![no_main]

use kvlogic::format::parse_u64_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(list) = parse_u64_list(s) {
        let joined = list.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        assert_eq!(parse_u64_list(&joined).unwrap(), list);
    }
});
