#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::quiverhh::{Chain, Quiver};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let q = Quiver::parse("3\n1 2 a\n2 3 b\n3 1 c\n1 1 t\n").expect("valid quiver");
    if let Ok(c) = Chain::parse(text, &q) {
        assert_eq!(Chain::parse(&c.display(&q), &q).as_ref(), Ok(&c));
    }
});
