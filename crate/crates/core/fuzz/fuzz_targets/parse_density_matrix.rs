#![no_main]

use libfuzzer_sys::fuzz_target;
use ringlink::qla::{parse_matrix_file, write_matrix_file, Tolerances};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let tol = Tolerances::default();
    for raw in [false, true] {
        if let Ok(rho) = parse_matrix_file(text, raw, &tol) {
            let back = parse_matrix_file(&write_matrix_file(rho.operator()), true, &tol).expect("written file parses");
            assert_eq!(back.matrix(), rho.matrix());
        }
    }
});
