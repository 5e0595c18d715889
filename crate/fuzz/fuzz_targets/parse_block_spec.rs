#![no_main]

use kvlogic::format::parse_block_spec;
use kvlogic::Partition;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(blocks) = parse_block_spec(s) {
        assert!(!blocks.is_empty());
        let _ = Partition::from_blocks(blocks);
    }
});
