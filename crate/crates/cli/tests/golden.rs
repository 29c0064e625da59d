//! Runs every `golden/*.case` file: an `args:` line, an `exit:` line, `---`,
//! then the exact expected stdout. Set `BLESS=1` to rewrite the files from the
//! current binary.

use std::fs;
use std::path::Path;
use std::process::Command;

struct Case {
    args: Vec<String>,
    exit: i32,
    stdout: String,
}

fn parse_case(text: &str) -> Case {
    let (head, body) = text.split_once("---\n").expect("case has a --- separator");
    let mut args = None;
    let mut exit = None;
    for line in head.lines() {
        if let Some(rest) = line.strip_prefix("args: ") {
            args = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("exit: ") {
            exit = Some(rest.trim().parse().expect("numeric exit code"));
        }
    }
    Case {
        args: args.expect("args line"),
        exit: exit.expect("exit line"),
        stdout: body.to_string(),
    }
}

#[test]
fn golden_cases() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let bless = std::env::var_os("BLESS").is_some();
    let mut paths: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "case"))
        .collect();
    paths.sort();
    assert!(!paths.is_empty(), "no golden cases in {}", dir.display());
    let mut mismatches = Vec::new();
    for path in &paths {
        let case = parse_case(&fs::read_to_string(path).unwrap());
        let out = Command::new(env!("CARGO_BIN_EXE_alladi"))
            .args(&case.args)
            .output()
            .unwrap();
        let stdout = String::from_utf8(out.stdout).unwrap();
        let code = out.status.code().unwrap_or(-1);
        if bless {
            let text = format!("args: {}\nexit: {code}\n---\n{stdout}", case.args.join(" "));
            let text = if stdout.is_empty() { text + "\n" } else { text };
            fs::write(path, text).unwrap();
            continue;
        }
        let expected = if case.stdout == "\n" {
            ""
        } else {
            case.stdout.as_str()
        };
        if code != case.exit || stdout != expected {
            mismatches.push(format!(
                "{}: exit {code} (want {}), stdout\n{stdout}--- want\n{expected}",
                path.display(),
                case.exit
            ));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}
