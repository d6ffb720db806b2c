#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::cli::Caps;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let mut caps = Caps::default();
    let _ = caps.apply(text);
});
