#![no_main]

use libfuzzer_sys::fuzz_target;
use ringlink::netplan::NetworkSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(spec) = NetworkSpec::parse_json(text) {
        if let Ok(p) = spec.polynomial() {
            assert!(p.is_link());
            assert_eq!(p.rings(), spec.parties.len());
        }
    }
});
