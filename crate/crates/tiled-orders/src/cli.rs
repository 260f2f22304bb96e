//! Command-line front end. One subcommand per invocation; JSON (or DOT) on
//! stdout, diagnostics on stderr. Exit status 0 on success, 1 on
//! verification failure, 2 on input errors. Output is byte-identical across
//! runs for identical input.

use std::io::{Read, Write};

use crate::classify::{verify_classification, ClassificationTarget, EnumerationOptions};
use crate::covering::{cover, semigroup_cover, NumericalSemigroup};
use crate::error::Error;
use crate::gorenstein::{cyclic_order, nakayama};
use crate::homology::homology;
use crate::json::{GorensteinJson, HomologyJson, PosetJson, QuiverJson, RawMatrix};
use crate::matrix::{conjugate_permutation, conjugate_shifts, validate, Permutation, ShiftVector};
use crate::realize::{realize_poset, realize_quiver};
use crate::stable::v_poset;

const USAGE: &str = "usage: tiled-orders <command> [flags] [input.json]

Input is read from the positional file argument, or from stdin when absent.

commands:
  validate                          check a raw matrix; emits the report
  gorenstein                        Nakayama permutation, b-invariants, parameters
  vposet [--dot]                    stable poset as poset JSON, or DOT of its
                                    quiver drawn toward the sink
  cover -m <M>                      degree-M covering of a matrix
  conjugate --shifts l1,..,ln       diagonal conjugation d(i,j) + l_i - l_j
  conjugate --perm s1,..,sn         relabeling by a one-based permutation
  realize                           matrix realizing a poset (or sink-tree quiver)
  semigroup --gens g1,g2,.. -m <M>  covering of a numerical semigroup algebra
  classify --size <n> --max-entry <B> --target <T>
                                    exhaustive verification scan; T is one of
                                    empty|a1|a2|a3lin|a3nonlin|rank3|cyclic;
                                    exit 1 when unmatched witnesses exist
  gldim                             projective dimensions over the incidence
                                    algebra of a poset (rational coefficients)
  cyclic --params m1,..,mn          the cyclic family matrix
";

struct Failure {
    message: String,
    code: i32,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        // serde_json reports line and column in its Display form
        Failure::input(format!("malformed JSON: {e}"))
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(format!("io error: {e}"))
    }
}

struct Parsed {
    command: String,
    input_path: Option<String>,
    dot: bool,
    degree: Option<i64>,
    gens: Option<Vec<i64>>,
    shifts: Option<Vec<i64>>,
    perm: Option<Vec<usize>>,
    params: Option<Vec<i64>>,
    size: Option<usize>,
    max_entry: Option<i64>,
    target: Option<String>,
}

fn parse_int_list(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| Failure::input(format!("expected an integer list, got {s:?}")))
        })
        .collect()
}

fn parse_args(args: &[String]) -> Result<Parsed, Failure> {
    let mut parsed = Parsed {
        command: args
            .first()
            .ok_or_else(|| Failure::input("missing command"))?
            .clone(),
        input_path: None,
        dot: false,
        degree: None,
        gens: None,
        shifts: None,
        perm: None,
        params: None,
        size: None,
        max_entry: None,
        target: None,
    };
    let mut it = args[1..].iter();
    while let Some(arg) = it.next() {
        let mut value = |name: &str| -> Result<String, Failure> {
            it.next()
                .cloned()
                .ok_or_else(|| Failure::input(format!("flag {name} needs a value")))
        };
        match arg.as_str() {
            "--dot" => parsed.dot = true,
            "-m" => {
                let v = value("-m")?;
                parsed.degree =
                    Some(v.parse().map_err(|_| {
                        Failure::input(format!("-m expects an integer, got {v:?}"))
                    })?);
            }
            "--gens" => parsed.gens = Some(parse_int_list(&value("--gens")?)?),
            "--shifts" => parsed.shifts = Some(parse_int_list(&value("--shifts")?)?),
            "--params" => parsed.params = Some(parse_int_list(&value("--params")?)?),
            "--perm" => {
                let list = parse_int_list(&value("--perm")?)?;
                let images = list
                    .into_iter()
                    .map(|v| {
                        usize::try_from(v)
                            .map_err(|_| Failure::input("permutation images must be positive"))
                    })
                    .collect::<Result<Vec<usize>, Failure>>()?;
                parsed.perm = Some(images);
            }
            "--size" => {
                let v = value("--size")?;
                parsed.size = Some(v.parse().map_err(|_| {
                    Failure::input(format!("--size expects a positive integer, got {v:?}"))
                })?);
            }
            "--max-entry" => {
                let v = value("--max-entry")?;
                parsed.max_entry = Some(v.parse().map_err(|_| {
                    Failure::input(format!("--max-entry expects an integer, got {v:?}"))
                })?);
            }
            "--target" => parsed.target = Some(value("--target")?),
            other if other.starts_with('-') && other.len() > 1 && other != "-" => {
                return Err(Failure::input(format!("unknown flag {other}")));
            }
            path => {
                if parsed.input_path.is_some() {
                    return Err(Failure::input(format!("unexpected extra argument {path}")));
                }
                parsed.input_path = Some(path.to_string());
            }
        }
    }
    Ok(parsed)
}

fn read_input(parsed: &Parsed, stdin: &mut dyn Read) -> Result<String, Failure> {
    match parsed.input_path.as_deref() {
        Some("-") | None => {
            let mut buf = String::new();
            stdin.read_to_string(&mut buf)?;
            Ok(buf)
        }
        Some(path) => Ok(std::fs::read_to_string(path)?),
    }
}

fn parse_matrix(text: &str) -> Result<crate::matrix::ExponentMatrix, Failure> {
    let raw: RawMatrix = serde_json::from_str(text)?;
    if raw.size != raw.d.len() {
        return Err(Failure::input(format!(
            "size field {} does not match {} rows",
            raw.size,
            raw.d.len()
        )));
    }
    Ok(raw.into_matrix()?)
}

/// Runs one subcommand; the process front end forwards the exit status.
pub fn run(
    args: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    match execute(args, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            if failure.code == 2 && failure.message == "missing command" {
                let _ = write!(stderr, "{USAGE}");
            }
            failure.code
        }
    }
}

fn execute(
    args: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, Failure> {
    let parsed = parse_args(args)?;
    match parsed.command.as_str() {
        "validate" => {
            let raw: RawMatrix = serde_json::from_str(&read_input(&parsed, stdin)?)?;
            if raw.size != raw.d.len() {
                return Err(Failure::input(format!(
                    "size field {} does not match {} rows",
                    raw.size,
                    raw.d.len()
                )));
            }
            let report = validate(&raw.d)?;
            writeln!(stdout, "{}", serde_json::to_string(&report)?)?;
            Ok(0)
        }
        "gorenstein" => {
            let m = parse_matrix(&read_input(&parsed, stdin)?)?;
            match nakayama(&m)? {
                Some(g) => {
                    writeln!(
                        stdout,
                        "{}",
                        serde_json::to_string(&GorensteinJson::from(&g))?
                    )?;
                    Ok(0)
                }
                None => {
                    writeln!(stdout, "null")?;
                    writeln!(stderr, "not Gorenstein: no Nakayama bijection")?;
                    Ok(1)
                }
            }
        }
        "vposet" => {
            let m = parse_matrix(&read_input(&parsed, stdin)?)?;
            let vp = v_poset(&m)?;
            if parsed.dot {
                // quiver of the stable poset drawn toward the sink, i.e. the
                // drawn orientation of the opposite poset's Hasse quiver
                write!(stdout, "{}", vp.carrier().hasse().to_dot())?;
            } else {
                writeln!(
                    stdout,
                    "{}",
                    serde_json::to_string(&PosetJson::from(vp.carrier()))?
                )?;
            }
            Ok(0)
        }
        "cover" => {
            let degree = parsed
                .degree
                .ok_or_else(|| Failure::input("cover needs -m <degree>"))?;
            if degree < 1 {
                return Err(Failure::from(Error::BadCoverDegree(degree)));
            }
            let m = parse_matrix(&read_input(&parsed, stdin)?)?;
            let c = cover(&m, degree as usize)?;
            writeln!(stdout, "{}", serde_json::to_string(&RawMatrix::from(&c))?)?;
            Ok(0)
        }
        "conjugate" => {
            let m = parse_matrix(&read_input(&parsed, stdin)?)?;
            let out = match (&parsed.shifts, &parsed.perm) {
                (Some(shifts), None) => conjugate_shifts(&m, &ShiftVector(shifts.clone()))?,
                (None, Some(perm)) => {
                    conjugate_permutation(&m, &Permutation::from_one_based(perm)?)?
                }
                _ => {
                    return Err(Failure::input(
                        "conjugate needs exactly one of --shifts or --perm",
                    ))
                }
            };
            if !out.is_n_graded() {
                writeln!(stderr, "note: result is not N-graded")?;
            }
            writeln!(stdout, "{}", serde_json::to_string(&RawMatrix::from(&out))?)?;
            Ok(0)
        }
        "realize" => {
            let text = read_input(&parsed, stdin)?;
            let value: serde_json::Value = serde_json::from_str(&text)?;
            let m = if value.get("elements").is_some() {
                let poset: PosetJson = serde_json::from_str(&text)?;
                realize_poset(&poset.into_poset()?)?
            } else if value.get("vertices").is_some() {
                let quiver: QuiverJson = serde_json::from_str(&text)?;
                realize_quiver(&quiver.into_quiver()?)?
            } else {
                return Err(Failure::input(
                    "realize expects poset JSON (elements/relations) or quiver JSON (vertices/arrows)",
                ));
            };
            writeln!(stdout, "{}", serde_json::to_string(&RawMatrix::from(&m))?)?;
            Ok(0)
        }
        "semigroup" => {
            let gens = parsed
                .gens
                .clone()
                .ok_or_else(|| Failure::input("semigroup needs --gens g1,g2,..."))?;
            let degree = parsed
                .degree
                .ok_or_else(|| Failure::input("semigroup needs -m <degree>"))?;
            if degree < 1 {
                return Err(Failure::from(Error::BadCoverDegree(degree)));
            }
            let s = NumericalSemigroup::new(&gens)?;
            let m = semigroup_cover(&s, degree as usize)?;
            writeln!(stdout, "{}", serde_json::to_string(&RawMatrix::from(&m))?)?;
            Ok(0)
        }
        "classify" => {
            let size = parsed
                .size
                .ok_or_else(|| Failure::input("classify needs --size <n>"))?;
            let max_entry = parsed
                .max_entry
                .ok_or_else(|| Failure::input("classify needs --max-entry <B>"))?;
            let target_name = parsed
                .target
                .clone()
                .ok_or_else(|| Failure::input("classify needs --target <name>"))?;
            let target = ClassificationTarget::parse(&target_name).ok_or_else(|| {
                Failure::input(format!(
                    "unknown target {target_name:?}; expected empty|a1|a2|a3lin|a3nonlin|rank3|cyclic"
                ))
            })?;
            // cheap feasibility check before the scan
            if !matches!(
                target,
                ClassificationTarget::Cyclic | ClassificationTarget::Rank3
            ) {
                crate::classify::enumerate(&EnumerationOptions {
                    size,
                    max_entry,
                    gorenstein_only: false,
                })?;
            }
            let report = verify_classification(size, max_entry, target)?;
            writeln!(stderr, "scan took {} ms", report.elapsed_ms)?;
            writeln!(stdout, "{}", serde_json::to_string(&report)?)?;
            Ok(if report.verified() { 0 } else { 1 })
        }
        "gldim" => {
            let poset: PosetJson = serde_json::from_str(&read_input(&parsed, stdin)?)?;
            let p = poset.into_poset()?;
            let report = homology(&p)?;
            writeln!(
                stdout,
                "{}",
                serde_json::to_string(&HomologyJson::new(&p, &report))?
            )?;
            Ok(0)
        }
        "cyclic" => {
            let params = parsed
                .params
                .clone()
                .ok_or_else(|| Failure::input("cyclic needs --params m1,m2,..."))?;
            let m = cyclic_order(&params)?;
            writeln!(stdout, "{}", serde_json::to_string(&RawMatrix::from(&m))?)?;
            Ok(0)
        }
        "help" | "--help" | "-h" => {
            write!(stdout, "{USAGE}")?;
            Ok(0)
        }
        other => Err(Failure::input(format!(
            "unknown command {other:?}; run `tiled-orders help`"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str], input: &str) -> (i32, String, String) {
        let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        let mut stdin = std::io::Cursor::new(input.as_bytes().to_vec());
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = run(&args, &mut stdin, &mut stdout, &mut stderr);
        (
            code,
            String::from_utf8(stdout).unwrap(),
            String::from_utf8(stderr).unwrap(),
        )
    }

    #[test]
    fn gorenstein_subcommand_emits_one_based_data() {
        let (code, out, _) = run_cli(&["gorenstein"], r#"{"size":2,"d":[[0,2],[1,0]]}"#);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"nu\":[2,1],\"b\":[1,2],\"p\":[0,-1]}\n");
    }

    #[test]
    fn vposet_dot_of_staircase() {
        let (code, out, _) = run_cli(
            &["vposet", "--dot"],
            r#"{"size":3,"d":[[0,0,0],[2,0,0],[2,2,0]]}"#,
        );
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "digraph {\n  \"(1,0,0)\";\n  \"(1,1,0)\";\n  \"(1,1,0)\" -> \"(1,0,0)\";\n}\n"
        );
    }

    #[test]
    fn validate_rejects_non_square_with_exit_two() {
        let (code, _, err) = run_cli(&["validate"], r#"{"size":2,"d":[[0,1],[1]]}"#);
        assert_eq!(code, 2);
        assert!(err.contains("not square"), "stderr: {err}");
    }

    #[test]
    fn malformed_json_reports_position() {
        let (code, _, err) = run_cli(&["validate"], "{\"size\":2,");
        assert_eq!(code, 2);
        assert!(err.contains("line"), "stderr: {err}");
    }

    #[test]
    fn non_gorenstein_input_exits_one_with_null() {
        let (code, out, _) = run_cli(
            &["gorenstein"],
            r#"{"size":3,"d":[[0,1,1],[1,0,1],[1,1,0]]}"#,
        );
        assert_eq!(code, 1);
        assert_eq!(out, "null\n");
    }

    #[test]
    fn conjugate_round_trip_between_subcommands() {
        let (code, out, _) = run_cli(
            &["conjugate", "--shifts", "-1,0"],
            r#"{"size":2,"d":[[0,2],[1,0]]}"#,
        );
        assert_eq!(code, 0);
        assert_eq!(out, "{\"size\":2,\"d\":[[0,1],[2,0]]}\n");
        // output feeds the next subcommand
        let (code2, out2, _) = run_cli(&["gorenstein"], out.trim());
        assert_eq!(code2, 0);
        assert_eq!(out2, "{\"nu\":[2,1],\"b\":[2,1],\"p\":[-1,0]}\n");
    }

    #[test]
    fn cover_and_semigroup_agree_on_the_bridge() {
        let (_, covered, _) = run_cli(&["cover", "-m", "2"], r#"{"size":1,"d":[[0]]}"#);
        assert_eq!(covered, "{\"size\":2,\"d\":[[0,0],[1,0]]}\n");
        let (code, via_semigroup, _) = run_cli(&["semigroup", "--gens", "2,3", "-m", "2"], "");
        assert_eq!(code, 0);
        assert_eq!(via_semigroup, "{\"size\":2,\"d\":[[0,1],[2,0]]}\n");
    }

    #[test]
    fn realize_accepts_both_poset_and_quiver_input() {
        let poset = r#"{"elements":["a","0"],"relations":[["a","0"]]}"#;
        let (code, out, _) = run_cli(&["realize"], poset);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"size\":2,\"d\":[[0,1],[2,0]]}\n");
        let quiver = r#"{"vertices":["a","0"],"arrows":[["a","0"]]}"#;
        let (code2, out2, _) = run_cli(&["realize"], quiver);
        assert_eq!(code2, 0);
        assert_eq!(out, out2);
    }

    #[test]
    fn gldim_consumes_vposet_output() {
        let (_, poset_json, _) = run_cli(&["vposet"], r#"{"size":2,"d":[[0,2],[1,0]]}"#);
        let (code, out, _) = run_cli(&["gldim"], poset_json.trim());
        assert_eq!(code, 0);
        // the minimum's simple has the full filter as projective cover
        assert_eq!(
            out,
            "{\"proj_dims\":{\"(0,0)\":1,\"(0,1)\":0},\"global_dimension\":1}\n"
        );
    }

    #[test]
    fn cyclic_subcommand() {
        let (code, out, _) = run_cli(&["cyclic", "--params", "1,1,1"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "{\"size\":3,\"d\":[[0,1,2],[2,0,1],[1,2,0]]}\n");
    }

    #[test]
    fn classify_small_scan_is_verified() {
        let (code, out, _) = run_cli(
            &[
                "classify",
                "--size",
                "2",
                "--max-entry",
                "2",
                "--target",
                "a2",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert!(out.contains("\"unmatched\":[]"), "stdout: {out}");
    }

    #[test]
    fn unknown_command_and_flags_exit_two() {
        assert_eq!(run_cli(&["frobnicate"], "").0, 2);
        assert_eq!(run_cli(&["vposet", "--bogus"], "{}").0, 2);
        assert_eq!(run_cli(&[], "").0, 2);
    }

    #[test]
    fn output_is_deterministic_across_runs() {
        let input = r#"{"size":3,"d":[[0,0,0],[2,0,0],[2,2,0]]}"#;
        let first = run_cli(&["vposet"], input);
        let second = run_cli(&["vposet"], input);
        assert_eq!(first, second);
    }
}
