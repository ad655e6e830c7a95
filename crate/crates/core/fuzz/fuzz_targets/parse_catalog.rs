#![no_main]

use libfuzzer_sys::fuzz_target;
use ringlink::enumerate::{parse_catalog, CatalogSet, ClassCatalog};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(file) = parse_catalog(text) else {
        return;
    };
    let lower = CatalogSet::embedded();
    if let Ok(catalog) = ClassCatalog::from_file(file.clone(), &lower) {
        assert_eq!(parse_catalog(&catalog.to_tsv()).expect("written catalog parses"), file);
    }
});
