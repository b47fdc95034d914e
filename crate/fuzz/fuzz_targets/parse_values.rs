//! Bare value lists (the CLI's --values input): parsing must never panic,
//! and accepted values must survive a print/reparse round trip exactly.

#![no_main]

use bicanon::parse_values;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(values) = parse_values(text) else {
        return;
    };
    let line = values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    let reparsed = parse_values(&line).expect("printed values parse");
    assert_eq!(values, reparsed, "print/parse must round-trip");
});
