//! Running `rab` in scratch directories and comparing with golden files.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

const BIN: &str = env!("CARGO_BIN_EXE_rab");

pub fn manifest() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn scratch(case: &str, run: usize) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("golden").join(format!("{case}-{run}"));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    for src in [manifest().join("../../data"), manifest().join("tests/fixtures")] {
        for entry in fs::read_dir(src).unwrap() {
            let path = entry.unwrap().path();
            fs::copy(&path, dir.join(path.file_name().unwrap())).unwrap();
        }
    }
    dir
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub files: Vec<(String, String)>,
}

/// Runs the steps in order (setup steps first, the last one is the case)
/// and collects the last step's output and the named produced files.
pub fn run(case: &str, run: usize, steps: &[&[&str]], produced: &[&str]) -> Result<Outcome, String> {
    let dir = scratch(case, run);
    let mut last = None;
    for args in steps {
        let out = Command::new(BIN)
            .args(*args)
            .current_dir(&dir)
            .env_remove("RAB_MAX_ELEMENTS")
            .output()
            .map_err(|e| format!("{case}: {e}"))?;
        last = Some(out);
    }
    let out = last.expect("at least one step");
    let mut files = Vec::new();
    for f in produced {
        let text = fs::read_to_string(dir.join(f)).map_err(|e| format!("{case}: {f}: {e}"))?;
        files.push((f.to_string(), text));
    }
    Ok(Outcome {
        code: out.status.code().ok_or_else(|| format!("{case}: killed by a signal"))?,
        stdout: String::from_utf8(out.stdout).map_err(|e| format!("{case}: {e}"))?,
        stderr: String::from_utf8(out.stderr).map_err(|e| format!("{case}: {e}"))?,
        files,
    })
}

fn compare(path: &Path, actual: &str) -> Result<(), String> {
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        return fs::write(path, actual).map_err(|e| format!("{}: {e}", path.display()));
    }
    let expected =
        fs::read_to_string(path).map_err(|e| format!("{}: {e} (run with UPDATE_GOLDEN=1)", path.display()))?;
    if expected != actual {
        return Err(format!("{} differs from the golden file:\n{actual}", path.display()));
    }
    Ok(())
}

pub struct Case {
    pub name: &'static str,
    /// Setup steps first; the last one is the case itself.
    pub steps: &'static [&'static [&'static str]],
    pub produced: &'static [&'static str],
    pub code: i32,
}

/// Golden cases, named `<subcommand>_<what>`.
pub const CASES: &[Case] = &[
    Case { name: "ball_p5", steps: &[&["ball", "p5.racs", "--radius", "2"]], produced: &[], code: 0 },
    Case { name: "ball_a1", steps: &[&["ball", "a1.racs", "--radius", "4"]], produced: &[], code: 0 },
    Case {
        name: "build_p5_glue",
        steps: &[&["build", "p5.racs", "--q", "2", "--radius", "2"]],
        produced: &[],
        code: 0,
    },
    Case {
        name: "build_p5_cover",
        steps: &[&["build", "p5.racs", "--q", "2", "--radius", "2", "--method", "cover"]],
        produced: &[],
        code: 0,
    },
    Case {
        name: "build_d2",
        steps: &[&["build", "d2.racs", "--q", "2,3", "--radius", "2", "--out", "d2.bldg"]],
        produced: &["d2.bldg"],
        code: 0,
    },
    Case {
        name: "build_bad_q",
        steps: &[&["build", "d2.racs", "--q", "2,3,4", "--radius", "1"]],
        produced: &[],
        code: 2,
    },
    Case {
        name: "verify_p5",
        steps: &[&["build", "p5.racs", "--q", "2", "--radius", "2", "--out", "p5.bldg"], &["verify", "p5.bldg"]],
        produced: &[],
        code: 0,
    },
    Case {
        name: "verify_a1_cover",
        steps: &[
            &["build", "a1.racs", "--q", "2,3", "--radius", "3", "--method", "cover", "--out", "a1.bldg"],
            &["verify", "a1.bldg", "--checks", "f1,f2,f3,b1,axioms"],
        ],
        produced: &[],
        code: 0,
    },
    Case { name: "verify_wrong_q", steps: &[&["verify", "d2_wrong_q.bldg"]], produced: &[], code: 1 },
    Case {
        name: "halfspace_shortest",
        steps: &[&["halfspace", "p5.racs", "--w", "s2.s4", "--s", "s1", "--op", "shortest"]],
        produced: &[],
        code: 0,
    },
    Case {
        name: "halfspace_contains_one",
        steps: &[&["halfspace", "p5.racs", "--w", "s1.s3", "--s", "s3", "--op", "shortest"]],
        produced: &[],
        code: 0,
    },
    Case {
        name: "halfspace_crossing",
        steps: &[&["halfspace", "p5.racs", "--w", "1", "--s", "s1", "--op", "crossing", "--max-len", "3"]],
        produced: &[],
        code: 0,
    },
    Case {
        name: "halfspace_hull",
        steps: &[&["halfspace", "p5.racs", "--w", "1", "--w", "s1.s3", "--w", "s2", "--op", "hull"]],
        produced: &[],
        code: 0,
    },
    Case {
        name: "halfspace_parse_error",
        steps: &[&["halfspace", "duplicate.racs", "--w", "a", "--s", "b", "--op", "shortest"]],
        produced: &[],
        code: 2,
    },
    Case {
        name: "disjoint_p5",
        steps: &[
            &["build", "p5.racs", "--q", "2", "--radius", "3", "--out", "p5.bldg"],
            &["disjoint", "p5.bldg", "--N", "0,7", "--out-dir", "maps"],
        ],
        produced: &["maps/phi.morph", "maps/psi.morph"],
        code: 0,
    },
    Case {
        name: "disjoint_thin",
        steps: &[
            &["build", "a1.racs", "--q", "1,2", "--radius", "3", "--out", "a1.bldg"],
            &["disjoint", "a1.bldg", "--N", "0", "--out-dir", "maps"],
        ],
        produced: &[],
        code: 2,
    },
    Case {
        name: "homology_antipodal_4x4",
        steps: &[&["homology", "--mode", "antipodal", "--sizes", "4,4"]],
        produced: &[],
        code: 0,
    },
    Case {
        name: "homology_antipodal_d2",
        steps: &[&["homology", "d2.racs", "--mode", "antipodal", "--sizes", "3,3", "--export", "square.cx"]],
        produced: &["square.cx"],
        code: 0,
    },
    Case {
        name: "homology_realize",
        steps: &[
            &["build", "d2.racs", "--q", "2", "--radius", "2", "--out", "d2.bldg"],
            &["homology", "d2.bldg", "--mode", "realize"],
        ],
        produced: &[],
        code: 0,
    },
    Case {
        name: "homology_complex",
        steps: &[
            &["homology", "--mode", "antipodal", "--sizes", "3,3,3", "--export", "octahedron.cx"],
            &["homology", "octahedron.cx", "--mode", "complex"],
        ],
        produced: &[],
        code: 0,
    },
    Case {
        name: "render_p5_depth0",
        steps: &[&["render", "p5.racs", "--depth", "0", "--out", "p5.svg"]],
        produced: &["p5.svg"],
        code: 0,
    },
    Case { name: "render_p6_depth2", steps: &[&["render", "--p", "6", "--depth", "2"]], produced: &[], code: 0 },
    Case { name: "render_p4", steps: &[&["render", "--p", "4"]], produced: &[], code: 2 },
];

/// Runs a case twice; both runs must agree byte for byte with each other
/// and with `tests/golden/<case>.*`.
pub fn check_golden(&Case { name: case, steps, produced, code }: &Case) -> Result<(), String> {
    let first = run(case, 0, steps, produced)?;
    let second = run(case, 1, steps, produced)?;
    if first.code != code {
        return Err(format!("{case}: exit {} instead of {code}; stderr {}", first.code, first.stderr));
    }
    if (&first.stdout, &first.stderr, &first.files) != (&second.stdout, &second.stderr, &second.files) {
        return Err(format!("{case}: output differs between runs"));
    }
    let dir = manifest().join("tests/golden");
    compare(&dir.join(format!("{case}.stdout")), &first.stdout)?;
    compare(&dir.join(format!("{case}.stderr")), &first.stderr)?;
    for (name, text) in &first.files {
        compare(&dir.join(format!("{case}.{}", name.replace('/', "_"))), text)?;
    }
    Ok(())
}
