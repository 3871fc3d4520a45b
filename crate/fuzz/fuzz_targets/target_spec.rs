#![no_main]

use bsk_core::subordination::Target;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<Target>() {
        let shown = t.to_string();
        let again: Target = shown.parse().expect("display re-parses");
        assert_eq!(again.to_string(), shown);
    }
});
