#![no_main]

use libfuzzer_sys::fuzz_target;
use ringlink::synth::{realize, StateRecipe};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(recipe) = StateRecipe::parse(text) {
        assert_eq!(StateRecipe::parse(&recipe.to_string()).expect("rendered recipe parses"), recipe);
        if recipe.qubits() <= 4 {
            let rho = realize(&recipe).expect("valid recipe realizes");
            assert!((rho.matrix().trace().re - 1.0).abs() < 1e-9);
        }
    }
});
