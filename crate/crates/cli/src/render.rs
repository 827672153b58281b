//! Disk-model drawings.
//!
//! Index `l` sits at angle `2 pi l / (2d - 2)`; ends sit half a step
//! earlier. Homoclinic chords join separatrix points and transversal chords
//! join end points. The separatrix model also joins the landing
//! separatrices of each class to an interior point standing for the
//! equilibrium.

use std::f64::consts::PI;
use std::fmt::Write;

use vfcomb::model::to_separatrix;
use vfcomb::{PairKind, PairingConfig, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Model {
    Separatrix,
    Transversal,
}

const SIZE: f64 = 400.0;
const RADIUS: f64 = 160.0;

type Point = (f64, f64);

fn point(angle_steps: f64, n: usize, scale: f64) -> Point {
    let theta = 2.0 * PI * angle_steps / n as f64;
    let c = SIZE / 2.0;
    (
        c + scale * RADIUS * theta.cos(),
        c - scale * RADIUS * theta.sin(),
    )
}

fn separatrix_point(l: usize, n: usize) -> Point {
    point(l as f64, n, 1.0)
}

fn end_point(l: usize, n: usize) -> Point {
    point(l as f64 - 0.5, n, 1.0)
}

fn chord_ends(config: &PairingConfig) -> Vec<(PairKind, Point, Point)> {
    let n = config.len();
    config
        .pairs()
        .iter()
        .map(|p| match p.kind {
            PairKind::Round => (
                p.kind,
                separatrix_point(p.low, n),
                separatrix_point(p.high, n),
            ),
            PairKind::Square => (p.kind, end_point(p.low, n), end_point(p.high, n)),
        })
        .collect()
}

/// Landing classes with an interior anchor point each.
fn landing_classes(config: &PairingConfig) -> Result<Vec<(Vec<usize>, Point)>> {
    let n = config.len();
    let data = to_separatrix(&config.to_transversal())?;
    let classes = data
        .classes()
        .iter()
        .filter(|c| !data.homoclinic().contains(&c[0]))
        .map(|c| {
            let (sx, sy) = c.iter().fold((0.0, 0.0), |(x, y), &l| {
                let (px, py) = separatrix_point(l, n);
                (x + px, y + py)
            });
            let k = c.len() as f64;
            let centre = SIZE / 2.0;
            // pull single-separatrix anchors inward so the edge is visible
            let pull = if c.len() == 1 { 0.6 } else { 1.0 };
            let anchor = (
                centre + pull * (sx / k - centre),
                centre + pull * (sy / k - centre),
            );
            (c.clone(), anchor)
        })
        .collect();
    Ok(classes)
}

pub fn svg(config: &PairingConfig, model: Model) -> Result<String> {
    let n = config.len();
    let mut out = String::new();
    let c = SIZE / 2.0;
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"  <circle class="boundary" cx="{c}" cy="{c}" r="{RADIUS}" fill="none" stroke="black"/>"#
    )
    .unwrap();
    for l in 0..n {
        let (x, y) = separatrix_point(l, n);
        let (lx, ly) = point(l as f64, n, 1.12);
        writeln!(
            out,
            r#"  <circle class="separatrix" cx="{x:.3}" cy="{y:.3}" r="3"/>"#
        )
        .unwrap();
        writeln!(
            out,
            r#"  <text x="{lx:.3}" y="{ly:.3}" font-size="12" text-anchor="middle" dominant-baseline="middle">{l}</text>"#
        )
        .unwrap();
    }
    if model == Model::Separatrix {
        for (class, (ax, ay)) in landing_classes(config)? {
            for l in class {
                let (x, y) = separatrix_point(l, n);
                writeln!(
                    out,
                    r#"  <line class="landing" x1="{x:.3}" y1="{y:.3}" x2="{ax:.3}" y2="{ay:.3}" stroke="gray"/>"#
                )
                .unwrap();
            }
            writeln!(
                out,
                r#"  <circle class="equilibrium" cx="{ax:.3}" cy="{ay:.3}" r="4" fill="gray"/>"#
            )
            .unwrap();
        }
    }
    for (kind, (x1, y1), (x2, y2)) in chord_ends(config) {
        let (class, stroke) = match kind {
            PairKind::Round => ("chord homoclinic", "blue"),
            PairKind::Square => ("chord transversal", "red"),
        };
        writeln!(
            out,
            r#"  <line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{stroke}" stroke-width="2"/>"#
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn dot(config: &PairingConfig, model: Model) -> Result<String> {
    let n = config.len();
    let mut out = String::from("graph disk {\n  layout=neato;\n");
    for l in 0..n {
        let (x, y) = separatrix_point(l, n);
        writeln!(
            out,
            "  s{l} [label=\"{l}\", pos=\"{:.3},{:.3}!\"];",
            x / 72.0,
            (SIZE - y) / 72.0
        )
        .unwrap();
    }
    for p in config.pairs() {
        let style = match p.kind {
            PairKind::Round => "class=homoclinic, color=blue",
            PairKind::Square => "class=transversal, color=red",
        };
        writeln!(out, "  s{} -- s{} [{style}];", p.low, p.high).unwrap();
    }
    if model == Model::Separatrix {
        for (k, (class, _)) in landing_classes(config)?.into_iter().enumerate() {
            writeln!(out, "  p{k} [shape=point];").unwrap();
            for l in class {
                writeln!(out, "  s{l} -- p{k} [class=landing, color=gray];").unwrap();
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}
