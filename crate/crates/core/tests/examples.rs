macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(
    fibonacci_kernel,
    "fibonacci_kernel.rs",
    fibonacci_kernel_runs
);
example!(grid_render, "grid_render.rs", grid_render_runs);
example!(
    spin_decomposition,
    "spin_decomposition.rs",
    spin_decomposition_runs
);
example!(region_sums, "region_sums.rs", region_sums_runs);
example!(oeis_audit, "oeis_audit.rs", oeis_audit_runs);
example!(property_sweeps, "property_sweeps.rs", property_sweeps_runs);
