#![no_main]

use libfuzzer_sys::fuzz_target;
use ringlink::linkpoly::LinkPolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = LinkPolynomial::parse(text) {
        let again = LinkPolynomial::parse_with_rings(&p.to_string(), p.rings()).expect("rendered form parses");
        assert_eq!(again, p);
        let r = p.reduce();
        assert_eq!(r.reduce(), r);
    }
});
