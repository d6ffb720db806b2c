#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::quiverhh::{trace_space, Quiver};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = Quiver::parse(text) {
        assert_eq!(Quiver::parse(&q.to_file_string()).as_ref(), Ok(&q));
        let _ = trace_space(&q, 4, 10_000);
    }
});
