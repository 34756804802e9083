use segre::problem::{check, execute, parse_problem, Invocation};

const PROBLEM: &str = "\
ring x y z
ideal Cubic: x^2 - y, x*y - z
ideal M: x, y, z
point O: 0, 0, 0
expect dim --ideal Cubic => dimension=1
expect mult --ideal Cubic --point O => local_dim=1 mult=1
expect segre --ideal M --space Cubic --point O => segre=[0,1]
";

fn main() -> segre::Result<()> {
    let problem = parse_problem(PROBLEM)?;
    let inv = Invocation::for_problem(&["gb", "--ideal", "Cubic", "--order", "lex"])?;
    print!("{}", execute(&problem, &inv)?.to_text());
    for outcome in check(&problem)? {
        let verdict = if outcome.passed() { "ok" } else { "MISMATCH" };
        println!(
            "line {} `{}`: {verdict} {:?}",
            outcome.line, outcome.command, outcome.mismatches
        );
    }
    Ok(())
}
