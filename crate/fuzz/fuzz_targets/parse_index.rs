#![no_main]

use jhankel::parse::{parse_index, parse_index_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(n) = parse_index(text) {
        // Any accepted index has a canonical decimal form that parses back.
        assert_eq!(parse_index(&n.to_string()).unwrap(), n);
    }
    if let Ok(list) = parse_index_list(text) {
        assert_eq!(list.len(), text.split(',').count());
    }
});
