#![no_main]

use libfuzzer_sys::fuzz_target;
use sakaguchi::scalar::parse_rational;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Some(q) = parse_rational(text) {
        assert_eq!(parse_rational(&q.to_string()), Some(q));
    }
});
