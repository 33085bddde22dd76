#![no_main]

use libfuzzer_sys::fuzz_target;

// Potential files are the only untrusted file input. Accepted inputs must
// round-trip and support the basic derived quantities without panicking.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = hillspec::PotentialFourier::from_json_str(text) else { return };
    let back = hillspec::PotentialFourier::from_json_str(&p.to_json_string())
        .expect("serialized potential must reparse");
    assert_eq!(p.is_real(), back.is_real());
    let _ = p.l2_norm();
    let _ = p.v_coefficients();
    let _ = p.sine_coefficients(16);
});
