use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write as _};
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, ensure, Context as _, Result};
use rab_core::building::{
    build_by_covering, build_regular, parse_bldg, verify as verify_checks, write_bldg, BuildingBall, Check,
};
use rab_core::complexes::{antipodal_subcomplex, homology as reduced_homology, realize, SimplicialComplex};
use rab_core::coxeter::{enumerate_ball, sphere_sizes};
use rab_core::finite::ProductBuilding;
use rab_core::halfspace::{convex_hull, HalfSpace};
use rab_core::morphism::{
    audit_disjoint_pair, content_hash, disjoint_pair, realization_disjointness_check, write_morphism,
};
use rab_core::{ChamberSystem, CoxeterSystem, Element, Limits};
use serde_json::json;

use crate::render::{polygon_order, render_svg};
use crate::report::{Input, RunReport};
use crate::{HalfSpaceOp, HomologyMode, Method};

pub struct Context {
    echo: Vec<String>,
    timing: bool,
    start: Instant,
    limits: Limits,
}

impl Context {
    pub fn new(echo: Vec<String>, timing: bool, start: Instant) -> Self {
        Context { echo, timing, start, limits: Limits::from_env() }
    }

    fn report(&self, inputs: Vec<Input>) -> RunReport {
        RunReport::new(self.echo.clone(), inputs)
    }

    fn elapsed_ms(&self) -> f64 {
        self.start.elapsed().as_secs_f64() * 1e3
    }

    /// Prints the report and returns whether every check passed.
    fn finish(&self, mut report: RunReport) -> bool {
        if self.timing {
            report.timing_ms = Some(self.elapsed_ms());
        }
        write_stdout(&report.to_json());
        report.passed
    }

    fn note_time(&self) {
        if self.timing {
            eprintln!("time {:.1} ms", self.elapsed_ms());
        }
    }
}

/// Writes to stdout; a reader that goes away early (`| head`) is not an error.
fn write_stdout(text: &str) {
    let mut out = io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn read(path: &Path) -> Result<(String, Input)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let input = Input { path: path.display().to_string(), hash: format!("{:016x}", content_hash(&text)) };
    Ok((text, input))
}

fn read_system(path: &Path) -> Result<(CoxeterSystem, Input)> {
    let (text, input) = read(path)?;
    let sys = CoxeterSystem::parse_racs(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((sys, input))
}

fn read_building(path: &Path, limits: Limits) -> Result<(BuildingBall, String, Input)> {
    let (text, input) = read(path)?;
    let b = parse_bldg(&text, limits).with_context(|| format!("parsing {}", path.display()))?;
    Ok((b, text, input))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            write_stdout(text);
            Ok(())
        }
    }
}

fn word(sys: &CoxeterSystem, w: &Element) -> String {
    w.display(sys).to_string()
}

pub fn ball(ctx: &Context, racs: &Path, radius: usize) -> Result<bool> {
    let (sys, _) = read_system(racs)?;
    let elements = enumerate_ball(&sys, radius, ctx.limits)?;
    let sizes = sphere_sizes(&sys, radius, ctx.limits)?;
    let mut out = String::new();
    let _ = writeln!(out, "# generators: {}", sys.names().join(" "));
    let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "# radius {radius}: {} elements, sphere sizes {}", elements.len(), sizes.join(" "));
    for (i, w) in elements.iter().enumerate() {
        let _ = writeln!(out, "{i} {} {}", w.len(), word(&sys, w));
    }
    write_stdout(&out);
    ctx.note_time();
    Ok(true)
}

pub fn build(
    ctx: &Context,
    racs: &Path,
    q: &[usize],
    radius: usize,
    method: Method,
    out: Option<&Path>,
) -> Result<bool> {
    let (sys, _) = read_system(racs)?;
    let q: Vec<usize> = match q.len() {
        1 => vec![q[0]; sys.rank()],
        n if n == sys.rank() => q.to_vec(),
        n => bail!("--q has {n} values for {} generators", sys.rank()),
    };
    let b = match method {
        Method::Glue => build_regular(&sys, &q, radius, ctx.limits)?,
        Method::Cover => {
            ensure!(q.iter().all(|&q| q >= 1), "thickness parameters must be at least 1");
            let sizes: Vec<usize> = q.iter().map(|q| q + 1).collect();
            build_by_covering(&sys, &sizes, radius, ctx.limits)?.building
        }
    };
    emit(&write_bldg(&b), out)?;
    eprintln!("{} chambers", b.chamber_count());
    ctx.note_time();
    Ok(true)
}

pub fn verify(ctx: &Context, bldg: &Path, checks: &[Check]) -> Result<bool> {
    let (b, _, input) = read_building(bldg, ctx.limits)?;
    let mut report = ctx.report(vec![input]);
    for o in verify_checks(&b, checks) {
        report.check(o.check.name(), o.checked, o.failure);
    }
    report.result = Some(json!({
        "generators": b.system().names(),
        "radius": b.radius(),
        "q": b.q(),
        "chambers": b.chamber_count(),
    }));
    Ok(ctx.finish(report))
}

pub fn halfspace(
    ctx: &Context,
    racs: &Path,
    words: &[String],
    s: Option<&str>,
    op: HalfSpaceOp,
    max_len: usize,
) -> Result<bool> {
    let (sys, input) = read_system(racs)?;
    let elements: Vec<Element> = words.iter().map(|w| sys.parse_word(w)).collect::<rab_core::Result<_>>()?;
    let mut report = ctx.report(vec![input]);
    if op == HalfSpaceOp::Hull {
        let hull = convex_hull(&sys, &elements, ctx.limits)?;
        report.result = Some(json!({
            "seeds": elements.iter().map(|w| word(&sys, w)).collect::<Vec<_>>(),
            "hull": hull.iter().map(|w| word(&sys, w)).collect::<Vec<_>>(),
        }));
        return Ok(ctx.finish(report));
    }
    let [w] = elements.as_slice() else {
        bail!("--op {} takes exactly one --w", if op == HalfSpaceOp::Shortest { "shortest" } else { "crossing" });
    };
    let s = s.context("--s is required for this operation")?;
    let s = sys.generator(s)?;
    let hs = HalfSpace::new(w.clone(), s);
    let head = json!({ "w": word(&sys, w), "s": sys.name(s), "inner": word(&sys, &hs.inner(&sys)?) });
    match op {
        HalfSpaceOp::Shortest => {
            let g = hs.shortest_element(&sys)?;
            // nothing else in the half-space is as short as g
            let rivals: Vec<Element> = enumerate_ball(&sys, g.len(), ctx.limits)?
                .into_iter()
                .filter(|h| h != &g && hs.contains(&sys, h).unwrap_or(false))
                .collect();
            let checked = sphere_sizes(&sys, g.len(), ctx.limits)?.iter().sum();
            report.check(
                "unique-minimum",
                checked,
                rivals
                    .first()
                    .map(|h| format!("{} is in the half-space and no longer than {}", word(&sys, h), word(&sys, &g))),
            );
            report.check(
                "contains-minimum",
                1,
                (!hs.contains(&sys, &g)?).then(|| format!("{} is not in the half-space", word(&sys, &g))),
            );
            report.result = Some(json!({
                "half_space": head,
                "contains_identity": hs.contains(&sys, &Element::identity(&sys))?,
                "shortest": word(&sys, &g),
                "length": g.len(),
            }));
        }
        HalfSpaceOp::Crossing => {
            let c = hs.crossing_set(&sys)?;
            let members = c.members_up_to(&sys, max_len)?;
            report.result = Some(json!({
                "half_space": head,
                "coset": format!("{}·W{}", word(&sys, &c.representative), sys.format_set(c.link)),
                "minimum": word(&sys, &sys.coset_minimum(&c.representative, c.link)?),
                "max_len": max_len,
                "members": members.iter().map(|h| word(&sys, h)).collect::<Vec<_>>(),
            }));
        }
        HalfSpaceOp::Hull => unreachable!("handled above"),
    }
    Ok(ctx.finish(report))
}

pub fn disjoint(ctx: &Context, bldg: &Path, n: &[usize], out_dir: &Path) -> Result<bool> {
    let (x, text, input) = read_building(bldg, ctx.limits)?;
    let pair = disjoint_pair(&x, n, ctx.limits)?;
    let mut report = ctx.report(vec![input]);
    for a in audit_disjoint_pair(&x, &pair) {
        report.check(a.name, a.checked, a.failure);
    }
    let r = realization_disjointness_check(&x, &pair.m, &pair.phi, &pair.psi)?;
    report.check(r.name, r.checked, r.failure);

    fs::create_dir_all(out_dir).with_context(|| format!("creating {}", out_dir.display()))?;
    let hash = content_hash(&text);
    let mut files = Vec::new();
    for (name, map) in [("phi.morph", &pair.phi), ("psi.morph", &pair.psi)] {
        let path = out_dir.join(name);
        fs::write(&path, write_morphism(hash, hash, map)).with_context(|| format!("writing {}", path.display()))?;
        files.push(path.display().to_string());
    }
    let sys = x.system();
    report.result = Some(json!({
        "N": n,
        "hull": pair.hull.iter().map(|h| word(sys, h)).collect::<Vec<_>>(),
        "M": pair.m,
        "morphisms": files,
    }));
    Ok(ctx.finish(report))
}

pub fn homology(
    ctx: &Context,
    input: Option<&Path>,
    mode: HomologyMode,
    sizes: &[usize],
    export: Option<&Path>,
) -> Result<bool> {
    let complex = match mode {
        HomologyMode::Realize => {
            let path = input.context("realize mode needs a .bldg file")?;
            let (b, _, _) = read_building(path, ctx.limits)?;
            realize(&b)?.0
        }
        HomologyMode::Complex => {
            let path = input.context("complex mode needs a complex file")?;
            let (text, _) = read(path)?;
            SimplicialComplex::parse(&text).with_context(|| format!("parsing {}", path.display()))?
        }
        HomologyMode::Antipodal => {
            ensure!(!sizes.is_empty(), "antipodal mode needs --sizes");
            let sys = match input {
                Some(path) => read_system(path)?.0,
                None => CoxeterSystem::finite(sizes.len()),
            };
            let p = ProductBuilding::new(&sys, sizes)?;
            antipodal_subcomplex(&p, p.base())?
        }
    };
    if let Some(path) = export {
        fs::write(path, complex.export()).with_context(|| format!("writing {}", path.display()))?;
    }
    let h = reduced_homology(&complex)?;
    let f: Vec<String> = complex.f_vector().iter().map(usize::to_string).collect();
    let mut out = String::new();
    let _ = writeln!(out, "# {} vertices, f-vector {}", complex.vertex_count(), f.join(" "));
    let _ = writeln!(out, "# reduced euler characteristic {}", h.reduced_euler_characteristic());
    for g in &h.groups {
        let _ = writeln!(out, "{g}");
    }
    write_stdout(&out);
    ctx.note_time();
    Ok(true)
}

pub fn render(ctx: &Context, racs: Option<&Path>, p: Option<usize>, depth: usize, out: Option<&Path>) -> Result<bool> {
    let sys = match (racs, p) {
        (Some(path), p) => {
            let sys = read_system(path)?.0;
            let order = polygon_order(&sys)?;
            if let Some(p) = p {
                ensure!(p == order, "--p {p} disagrees with the {order}-gon system in {}", path.display());
            }
            sys
        }
        (None, p) => {
            let p = p.unwrap_or(5);
            ensure!(p >= 5, "a right-angled regular {p}-gon does not exist in the hyperbolic plane (need p >= 5)");
            CoxeterSystem::polygon(p)
        }
    };
    emit(&render_svg(&sys, depth, ctx.limits)?, out)?;
    ctx.note_time();
    Ok(true)
}
