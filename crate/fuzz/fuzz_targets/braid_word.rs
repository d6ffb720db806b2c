#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::braidvar::{demazure, BraidWord};

fuzz_target!(|data: &[u8]| {
    let Some((&n, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    if let Ok(w) = BraidWord::parse(n as usize % 20, text) {
        assert!(demazure(&w).length() <= w.len());
    }
});
