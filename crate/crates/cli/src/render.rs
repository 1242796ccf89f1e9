//! One apartment of a right-angled `p`-gon building, drawn as the tiling of
//! the Poincaré disc by right-angled regular `p`-gons.

use std::f64::consts::PI;
use std::fmt::Write as _;

use anyhow::{bail, Result};
use num_complex::Complex64;
use rab_core::coxeter::enumerate_ball;
use rab_core::{CoxeterSystem, Limits};

const SIZE: f64 = 800.0;
const SCALE: f64 = 380.0;
const FILLS: [&str; 4] = ["#f2d39b", "#9bc2f2", "#b8e0b0", "#e6b0c8"];

/// A geodesic of the disc that misses the origin: a circle orthogonal to the boundary.
#[derive(Clone, Copy, Debug)]
struct Geodesic {
    center: Complex64,
    radius: f64,
}

impl Geodesic {
    /// Inversion in the circle.
    fn reflect(self, z: Complex64) -> Complex64 {
        self.center + self.radius * self.radius / (z - self.center).conj()
    }
}

/// Vertices and side geodesics of the right-angled regular `p`-gon centred at 0.
///
/// Side `i` joins vertices `i` and `i + 1`, so consecutive sides meet at a
/// right angle, matching `s_i` commuting with `s_{i±1}`.
fn base_polygon(p: usize) -> (Vec<Complex64>, Vec<Geodesic>) {
    let half = PI / p as f64;
    // cosh R = cot(π/p) cot(π/4) for the circumradius R
    let cosh_r = 1.0 / half.tan();
    let r = (cosh_r.acosh() / 2.0).tanh();
    let offset = PI / 2.0 - half;
    let vertices: Vec<Complex64> = (0..p).map(|k| Complex64::from_polar(r, offset + 2.0 * half * k as f64)).collect();
    // the side circle is centred on the bisecting ray at distance d, with d² = 1 + ρ²
    let d = (r * r + 1.0) / (2.0 * r * half.cos());
    let sides = (0..p)
        .map(|i| Geodesic {
            center: Complex64::from_polar(d, offset + half * (2 * i + 1) as f64),
            radius: (d * d - 1.0).sqrt(),
        })
        .collect();
    (vertices, sides)
}

/// Checks that `sys` is the right-angled `p`-gon group with generators in
/// cyclic order.
pub fn polygon_order(sys: &CoxeterSystem) -> Result<usize> {
    let p = sys.rank();
    if p < 5 {
        bail!("a right-angled regular {p}-gon does not exist in the hyperbolic plane (need p >= 5)");
    }
    for s in 0..p {
        for t in s + 1..p {
            let neighbours = t == s + 1 || (s == 0 && t == p - 1);
            if sys.commute(s, t) != neighbours {
                bail!(
                    "generators must form a {p}-cycle in order: `{}` and `{}` {}",
                    sys.name(s),
                    sys.name(t),
                    if neighbours { "should commute" } else { "should not commute" }
                );
            }
        }
    }
    Ok(p)
}

fn coord(v: f64) -> String {
    // avoid "-0.000"
    let v = if v.abs() < 5e-4 { 0.0 } else { v };
    format!("{v:.3}")
}

fn screen(z: Complex64) -> (String, String) {
    (coord(SIZE / 2.0 + SCALE * z.re), coord(SIZE / 2.0 - SCALE * z.im))
}

/// SVG path command drawing the geodesic segment from `a` to `b`.
fn edge(a: Complex64, b: Complex64) -> String {
    let (bx, by) = screen(b);
    // the orthogonal circle through a and b also passes through 1/ā
    let a_star = a / a.norm_sqr();
    let det = 2.0 * ((a.re - b.re) * (b.im - a_star.im) - (b.re - a_star.re) * (a.im - b.im));
    let collinear = (a.re * b.im - a.im * b.re).abs() < 1e-9 || det.abs() < 1e-12 || a.norm_sqr() < 1e-12;
    if collinear {
        return format!("L {bx} {by}");
    }
    let (aa, bb, cc) = (a.norm_sqr(), b.norm_sqr(), a_star.norm_sqr());
    let ux = (aa * (b.im - a_star.im) + bb * (a_star.im - a.im) + cc * (a.im - b.im)) / det;
    let uy = (aa * (a_star.re - b.re) + bb * (a.re - a_star.re) + cc * (b.re - a.re)) / det;
    let center = Complex64::new(ux, uy);
    let rho = (a - center).norm() * SCALE;
    let chord = b - a;
    let to_center = center - a;
    // counterclockwise in the disc is clockwise on screen, which SVG calls sweep 1
    let sweep = u8::from(chord.re * to_center.im - chord.im * to_center.re > 0.0);
    format!("A {} {} 0 0 {sweep} {bx} {by}", coord(rho), coord(rho))
}

/// Chambers `w` with `ℓ(w) ≤ depth`, each the image of the base polygon
/// under the product of side reflections spelled by `w`.
pub fn render_svg(sys: &CoxeterSystem, depth: usize, limits: Limits) -> Result<String> {
    let p = polygon_order(sys)?;
    let (vertices, sides) = base_polygon(p);
    let elements = enumerate_ball(sys, depth, limits)?;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let (c, _) = screen(Complex64::new(0.0, 0.0));
    let _ = writeln!(out, r#"<circle cx="{c}" cy="{c}" r="{SCALE}" fill="white" stroke="black" stroke-width="1.5"/>"#);
    for w in &elements {
        let image: Vec<Complex64> =
            vertices.iter().map(|&v| w.letters().rev().fold(v, |z, s| sides[s].reflect(z))).collect();
        let (x0, y0) = screen(image[0]);
        let mut d = format!("M {x0} {y0}");
        for k in 0..p {
            d.push(' ');
            d.push_str(&edge(image[k], image[(k + 1) % p]));
        }
        let _ = writeln!(
            out,
            r#"<path d="{d} Z" fill="{}" stroke="black" stroke-width="0.5"><title>{}</title></path>"#,
            FILLS[w.len() % FILLS.len()],
            w.display(sys)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_polygon_has_right_angles() {
        for p in 5..9 {
            let (v, sides) = base_polygon(p);
            for (i, side) in sides.iter().enumerate() {
                let Geodesic { center, radius } = *side;
                // both endpoints lie on the side circle, which is orthogonal to the boundary
                assert!(((v[i] - center).norm() - radius).abs() < 1e-9);
                assert!(((v[(i + 1) % p] - center).norm() - radius).abs() < 1e-9);
                assert!((center.norm_sqr() - 1.0 - radius * radius).abs() < 1e-9);
                // adjacent side circles meet at right angles: |c1 - c2|² = ρ1² + ρ2²
                let Geodesic { center: c2, radius: r2 } = sides[(i + 1) % p];
                assert!(((center - c2).norm_sqr() - radius * radius - r2 * r2).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn reflections_are_involutions_fixing_their_side() {
        let (v, sides) = base_polygon(5);
        let z = Complex64::new(0.1, -0.2);
        for (i, g) in sides.iter().enumerate() {
            assert!((g.reflect(g.reflect(z)) - z).norm() < 1e-12);
            assert!((g.reflect(v[i]) - v[i]).norm() < 1e-12);
        }
    }

    #[test]
    fn small_p_is_rejected() {
        assert!(polygon_order(&CoxeterSystem::polygon(4)).is_err());
        assert!(polygon_order(&CoxeterSystem::polygon(5)).is_ok());
        assert!(polygon_order(&CoxeterSystem::finite(5)).is_err());
    }

    #[test]
    fn depth_zero_is_one_centred_polygon() {
        let svg = render_svg(&CoxeterSystem::polygon(5), 0, Limits::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 1);
        let svg = render_svg(&CoxeterSystem::polygon(5), 1, Limits::default()).unwrap();
        assert_eq!(svg.matches("<path").count(), 6);
    }
}
