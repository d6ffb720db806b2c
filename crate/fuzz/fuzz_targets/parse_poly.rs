#![no_main]
use libfuzzer_sys::fuzz_target;
use merolib::exactalg::{parse_poly, parse_poly_auto, vars};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_poly_auto(text) {
        let again = parse_poly(&p.to_string(), p.vars()).expect("display parses");
        assert_eq!(again, p);
    }
    let _ = parse_poly(text, &vars(&["x", "y"]));
});
