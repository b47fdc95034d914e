//! Pattern files: parsing must never panic, and parse -> render -> parse
//! must be the identity on accepted inputs.

#![no_main]

use bicanon::Pattern;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(pattern) = Pattern::parse(text) else {
        return;
    };
    let rendered = pattern.render();
    let reparsed = Pattern::parse(&rendered).expect("rendered pattern parses");
    assert_eq!(pattern, reparsed, "render/parse must round-trip");
});
