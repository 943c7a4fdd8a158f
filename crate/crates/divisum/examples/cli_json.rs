// The CLI is a function from argv to (exit code, stdout, stderr), so it can
// be driven in-process.  The JSON mode carries the whole pipeline result in
// one versioned object.

use divisum::cli::run;

fn shell(args: &[&str]) {
    println!("$ divisum {}", args.join(" "));
    let out = run(&args.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    print!("{}", out.stdout);
    if !out.stderr.is_empty() {
        print!("[stderr] {}", out.stderr);
    }
    if out.exit_code != 0 {
        println!("[exit {}]", out.exit_code);
    }
    println!();
}

fn main() {
    shell(&["sum", "P(1)"]);
    shell(&["terms", "P(1) os (e(0) - 4*e(1))", "-n", "8"]);
    shell(&["gf", "T(2)"]);
    shell(&["classify", "G(-1)"]);
    shell(&["explain", "P(1)"]);
    shell(&["sum", "--json", "P(1)"]);
    shell(&["zeta", "-3"]);
    shell(&["sum", "H"]);
}
