#![no_main]

use jhankel::EisensteinInt;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if text.len() > 512 {
        return;
    }
    if let Ok(x) = text.parse::<EisensteinInt>() {
        let shown = x.to_string();
        assert_eq!(shown.parse::<EisensteinInt>().unwrap(), x);
        assert_eq!(x.conj().conj(), x);
        if !x.is_zero() {
            assert_eq!((&x * &x).exact_div(&x).unwrap(), x);
        }
    }
});
