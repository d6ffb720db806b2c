#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::holonomy::{intersection_vector, local_lift, CrossingWord};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(w) = CrossingWord::parse(text, None) {
        assert_eq!(CrossingWord::parse(&w.to_string(), Some(w.disks())).as_ref(), Ok(&w));
        assert_eq!(intersection_vector(&w), intersection_vector(&w.reduced()));
        let _ = local_lift(&w);
    }
});
