#![no_main]

use libfuzzer_sys::fuzz_target;
use sakaguchi::wspec::parse_w_spec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(w) = parse_w_spec(text) {
        // Display output must parse back to the same coefficients.
        let again = parse_w_spec(&w.to_string()).expect("display reparses");
        assert_eq!(again.coeffs(), w.coeffs());
    }
});
