use std::path::{Path, PathBuf};

use segre::problem::{check, parse_problem};

fn corpus() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "seg"))
        .collect();
    files.sort();
    files
}

#[test]
fn every_expectation_holds() {
    let files = corpus();
    assert!(files.len() >= 8, "corpus has {} files", files.len());
    for path in files {
        let problem = parse_problem(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert!(
            !problem.expectations.is_empty(),
            "{} has no expectations",
            path.display()
        );
        for outcome in check(&problem).unwrap() {
            assert!(
                outcome.passed(),
                "{}:{} `{}`: {:?}",
                path.display(),
                outcome.line,
                outcome.command,
                outcome.mismatches
            );
        }
    }
}

#[test]
fn check_reports_mismatches() {
    let text =
        "ring x y\nideal C: x^2 - y^3\npoint O: 0, 0\nexpect mult --ideal C --point O => mult=3\n";
    let outcomes = check(&parse_problem(text).unwrap()).unwrap();
    assert_eq!(outcomes.len(), 1);
    assert!(!outcomes[0].passed());
    assert!(outcomes[0].mismatches[0].contains("mult"));
}
