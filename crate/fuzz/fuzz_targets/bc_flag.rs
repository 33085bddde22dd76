#![no_main]

use hillspec::fourier_ops::BcSpec;
use libfuzzer_sys::fuzz_target;

// The --bc flag grammar: per+ | per- | dir | theta=<float in [0, pi]>.
// Accepted values mustround-trip through their label.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(bc) = text.parse::<BcSpec>() else { return };
    let relabeled: BcSpec = bc.label().parse().expect("label must reparse");
    assert_eq!(bc, relabeled);
    if let Some(theta) = bc.theta() {
        assert!((0.0..=std::f64::consts::PI).contains(&theta));
    }
    let _ = bc.indices(8);
});
