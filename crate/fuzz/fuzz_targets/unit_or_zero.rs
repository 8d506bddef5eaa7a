#![no_main]

use jhankel::UnitOrZero;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(u) = text.parse::<UnitOrZero>() {
        assert_eq!(u.as_str(), text);
        assert_eq!(UnitOrZero::try_from(u.to_eisenstein()).unwrap(), u);
    }
});
