// Problem files: parse, render and run a command to a text or JSON report.

use graded_cogroups::cli::{parse_spec, render, run_command, Flags};

const PROBLEM: &str = "\
# x is a square of the primitive y
ring Q
generator y degree 2
generator x degree 4
coproduct x = y * y
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = parse_spec(PROBLEM)?;
    println!("canonical form:\n{}", render(&spec));
    assert_eq!(parse_spec(&render(&spec))?, spec);

    let flags = Flags {
        max_degree: Some(6),
        ..Flags::default()
    };
    let report = run_command(&spec, "nu-eq-chi", &flags)?;
    println!("{}", report.to_text());
    assert_eq!(report.exit_code, 1);

    let json = run_command(&spec, "classify", &Flags { json: true, ..flags })?;
    println!("{}", json.to_json());

    match parse_spec("ring Q\ngenerator x degree two\n") {
        Ok(_) => return Err("bad degree accepted".into()),
        Err(e) => println!("parse error: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("problem file example");
}
