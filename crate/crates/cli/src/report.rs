//! JSON payloads for the library's result types.

use mixedpoly::invariants::{CurveInvariants, GenusTable};
use mixedpoly::projective::ScanReport;
use mixedpoly::roots::PointCount;
use mixedpoly::{CertifiedRoot, Complex64, DegreeVerdict, LineSection, RootInventory, WeightAnalysis};
use serde_json::{json, Map, Value};

pub struct Report {
    pub command: &'static str,
    pub inputs: Map<String, Value>,
    pub results: Value,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            inputs: Map::new(),
            results: Value::Null,
            warnings: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "warnings": self.warnings,
        })
    }
}

pub fn complex(z: Complex64) -> Value {
    json!([z.re, z.im])
}

pub fn error(e: &anyhow::Error) -> Value {
    let kind = e.downcast_ref::<mixedpoly::Error>().map_or("Usage", |m| m.kind());
    json!({ "error": { "kind": kind, "message": e.to_string() } })
}

pub fn weights(w: &WeightAnalysis) -> Value {
    json!({
        "radial_weights": w.radial_weights,
        "radial_degree": w.radial_degree,
        "polar_weights": w.polar_weights,
        "polar_degree": w.polar_degree,
        "strongly_polar_weighted": w.strongly_polar_weighted,
        "strongly_polar_homogeneous": w.strongly_polar_homogeneous,
        "class": match (w.class_q, w.class_r) {
            (Some(q), Some(r)) => json!({ "q": q, "r": r }),
            _ => Value::Null,
        },
        "non_unique_weights": w.non_unique_weights,
    })
}

fn root(r: &CertifiedRoot) -> Value {
    json!({
        "center": complex(r.root_box.center),
        "half_width": r.root_box.half_width,
        "estimate": complex(r.estimate),
        "index": r.index,
        "residual": r.residual,
        "simple": r.simple,
    })
}

pub fn inventory(inv: &RootInventory) -> Value {
    json!({
        "roots": inv.roots.iter().map(root).collect::<Vec<_>>(),
        "index_sum": inv.index_sum,
        "search_radius": inv.search_radius,
    })
}

pub fn inventory_warnings(inv: &RootInventory, warnings: &mut Vec<String>) {
    for r in inv.index_zero_clusters() {
        warnings.push(format!(
            "index-0 cluster near ({:.6}, {:.6}), residual {:.3e}",
            r.estimate.re, r.estimate.im, r.residual
        ));
    }
}

pub fn point_count(pc: &PointCount) -> Value {
    json!({
        "count": pc.count,
        "uncertified": pc.uncertified,
        "rotation": pc.rotation,
        "chart": inventory(&pc.inventory),
    })
}

fn section(s: &LineSection) -> Value {
    json!({
        "line": s.coeffs.iter().map(|[a, b]| json!([complex(*a), complex(*b)])).collect::<Vec<_>>(),
        "restricted": mixedpoly::format(&s.restricted),
        "total_index": s.total_index,
        "roots": s.inventory.roots.iter().map(root).collect::<Vec<_>>(),
    })
}

pub fn verdict(v: &DegreeVerdict) -> Value {
    json!({
        "polar_degree": v.polar_degree,
        "agree": v.agree,
        "total_indices": v.sections.iter().map(|s| s.total_index).collect::<Vec<_>>(),
        "rejections": v.rejections,
        "seed": v.seed,
        "sections": v.sections.iter().map(section).collect::<Vec<_>>(),
    })
}

pub fn curve(c: &CurveInvariants) -> Value {
    json!({
        "q": c.q,
        "r": c.r,
        "chi_f": c.chi_f,
        "milnor": c.milnor,
        "genus": c.genus,
        "chi_v": c.chi_v,
        "chi_complement": c.chi_complement,
        "zeta_exponent": c.zeta_exponent,
        "homology": c.homology,
        "thom_bound": c.thom_bound,
    })
}

pub fn genus_table(t: &GenusTable) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| json!({ "q": r.q, "j": r.j, "chi_f": r.chi_f, "genus": r.genus, "thom_bound": r.thom_bound }))
        .collect();
    let attainable: Map<String, Value> = t.attainable.iter().map(|(q, g)| (q.to_string(), json!(g))).collect();
    json!({ "family": t.kind.name(), "r": t.r, "rows": rows, "attainable": attainable })
}

pub fn scan(s: &ScanReport) -> Value {
    let histogram: Map<String, Value> = s.histogram.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({
        "q": s.q,
        "r": s.r,
        "trials": s.trials,
        "seed": s.seed,
        "predicted": s.predicted(),
        "histogram": histogram,
        "failures": s.failures,
        "outliers": s.outliers.iter().map(|o| json!({ "trial": o.trial, "count": o.count })).collect::<Vec<_>>(),
        "uncertified": s.uncertified,
    })
}
