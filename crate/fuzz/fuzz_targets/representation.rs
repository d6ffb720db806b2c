#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::quiverhh::{ho_trace, Chain, Quiver, Representation};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let q = Quiver::cyclic(2);
    if let Ok(rep) = Representation::parse(text, &q) {
        let rho = Chain::parse("[a1 a2]", &q).expect("valid chain");
        let _ = ho_trace(&rho, &rep);
    }
});
