macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(ring_snf, "ring_snf.rs");
example!(tensor_algebra, "tensor_algebra.rs");
example!(coalgebra, "coalgebra.rs");
example!(polynomial_cogroup, "polynomial_cogroup.rs");
example!(antipode, "antipode.rs");
example!(convolution_group, "convolution_group.rs");
example!(classify_modules, "classify_modules.rs");
example!(dsl_report, "dsl_report.rs");

#[test]
fn ring_snf_runs() {
    ring_snf::run_example().expect("ring example");
}

#[test]
fn tensor_algebra_runs() {
    tensor_algebra::run_example().expect("tensor algebra example");
}

#[test]
fn coalgebra_runs() {
    coalgebra::run_example().expect("coalgebra example");
}

#[test]
fn polynomial_cogroup_runs() {
    polynomial_cogroup::run_example().expect("polynomial cogroup example");
}

#[test]
fn antipode_runs() {
    antipode::run_example().expect("antipode example");
}

#[test]
fn convolution_group_runs() {
    convolution_group::run_example().expect("convolution group example");
}

#[test]
fn classify_modules_runs() {
    classify_modules::run_example().expect("classification example");
}

#[test]
fn dsl_report_runs() {
    dsl_report::run_example().expect("problem file example");
}
