#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::cli::parse_quiver_spec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if !text.starts_with("file:") {
        let _ = parse_quiver_spec(text);
    }
});
