#![no_main]

use jhankel::automaton::Dfao;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(dfao) = Dfao::from_json(text) {
        // A validated automaton never indexes out of range.
        for n in 0..100u64 {
            dfao.run_u64(n);
        }
        assert_eq!(Dfao::from_json(&dfao.to_json()).unwrap(), dfao);
    }
});
