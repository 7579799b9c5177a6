fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").unwrap();

    let config = cbindgen::Config {
        language: cbindgen::Language::C,
        include_guard: Some("HKDET_H".to_string()),
        cpp_compat: true,
        documentation: true,
        enumeration: cbindgen::EnumConfig {
            prefix_with_name: true,
            ..Default::default()
        },
        header: Some(
            "/* C interface to hkdet: exact Hilbert-Kunz functions of 2x2 determinantal rings.\n \
             * Generated by cbindgen; do not edit by hand. */"
                .to_string(),
        ),
        ..Default::default()
    };

    cbindgen::generate_with_config(&crate_dir, config)
        .expect("generate C header")
        .write_to_file(std::path::Path::new(&crate_dir).join("include/hkdet.h"));

    println!("cargo:rerun-if-changed=src/lib.rs");
}
