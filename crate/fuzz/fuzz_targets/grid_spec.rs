#![no_main]

use bsk_core::janowski::{DiskGrid, GridSpec};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = s.parse::<GridSpec>() {
        // anything the parser accepts must build a grid
        if spec.n_r.saturating_mul(spec.n_theta) <= 1 << 16 {
            DiskGrid::from_spec(spec).expect("accepted spec builds");
        }
    }
});
