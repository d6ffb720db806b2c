#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::exactalg::VarietyPresentation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = VarietyPresentation::from_json(text) {
        let again = VarietyPresentation::from_json(&p.to_json()).expect("round trip");
        assert_eq!(again.to_json(), p.to_json());
        let _ = p.ring.count_points(2, 4_096);
    }
});
