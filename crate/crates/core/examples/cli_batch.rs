//! Drive the command-line layer from code and read its structured output.

use copvis::cli::{run_args, Format};

fn main() {
    let args = [
        "copvis",
        "solve",
        "--recipe",
        "cycle:4",
        "--recipe",
        "cycle:8",
        "--ell",
        "1",
        "--variant",
        "see",
        "--workers",
        "2",
        "--format",
        "structured",
    ];
    let (cli, report) = run_args(args).expect("valid arguments");
    print!("{}", report.render(cli.format));
    assert_eq!(report.code, 0);
    print!("{}", report.render(Format::Text));
}
