#![no_main]

use kvlogic::format::parse_var_list;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(vars) = parse_var_list(s) {
        let p = vars.positions();
        assert!(p.windows(2).all(|w| w[0] < w[1]));
        assert!(p.iter().all(|&v| v >= 1));
    }
});
