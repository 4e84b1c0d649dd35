// Every `console` block in the top-level README is a transcript: lines starting with
// `$ ncplane` are commands, the lines after them are the expected stdout.

const README: &str = include_str!("../../../README.md");

fn transcripts() -> Vec<(Vec<String>, String)> {
    let mut out = Vec::new();
    let mut in_block = false;
    let mut current: Option<(Vec<String>, String)> = None;
    for line in README.lines() {
        if line.starts_with("```") {
            in_block = line == "```console";
            if let Some(t) = current.take() {
                out.push(t);
            }
            continue;
        }
        if !in_block {
            continue;
        }
        if let Some(cmd) = line.strip_prefix("$ ncplane ") {
            if let Some(t) = current.take() {
                out.push(t);
            }
            current = Some((shlex::split(cmd).expect("shell words"), String::new()));
        } else if let Some((_, expected)) = current.as_mut() {
            expected.push_str(line);
            expected.push('\n');
        }
    }
    out
}

#[test]
fn readme_examples_match_output() {
    let cases = transcripts();
    assert!(cases.len() >= 10, "found only {} examples", cases.len());
    for (args, expected) in cases {
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = ncplane::cli::run(std::iter::once("ncplane".to_string()).chain(args.iter().cloned()), &mut stdout, &mut stderr);
        assert_eq!(code, 0, "{args:?}: {}", String::from_utf8_lossy(&stderr));
        assert_eq!(String::from_utf8(stdout).unwrap(), expected, "{args:?}");
    }
}
