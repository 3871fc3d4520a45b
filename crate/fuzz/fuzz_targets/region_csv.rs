#![no_main]

use bsk_core::janowski::{read_region_csv, write_region_csv};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(records) = read_region_csv(data) else { return };
    let mut out = Vec::new();
    write_region_csv(&records, &mut out).expect("parsed records serialize");
    let _ = read_region_csv(out.as_slice());
});
