//! On-disk classification database: `dag.json` with everything, a
//! `manifest.jsonl` with one record per class, and the codes themselves in
//! the `binary` and `z4` text formats.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};
use z4codes::classify::{AugmentationDag, Status};

use crate::records::ResultRecord;

const DAG_FILE: &str = "dag.json";

pub fn load(dir: &Path) -> Result<Option<AugmentationDag>> {
    let path = dir.join(DAG_FILE);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
    let dag = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Some(dag))
}

pub fn save(dir: &Path, dag: &AugmentationDag, seed: u64) -> Result<()> {
    fs::create_dir_all(dir.join("codes"))?;
    fs::create_dir_all(dir.join("witnesses"))?;
    let mut manifest = String::new();
    for (i, n) in dag.nodes.iter().enumerate() {
        let code_file = format!("codes/{i:03}.binary");
        fs::write(dir.join(&code_file), n.canonical.to_text())?;
        let (verdict, detail, witness_file) = match &n.status {
            Status::Realizable { witness, provenance } => {
                let f = format!("witnesses/{i:03}.z4");
                fs::write(dir.join(&f), witness.to_text())?;
                ("realizable", serde_json::to_value(provenance)?, Some(f))
            }
            Status::NonRealizable { m, classes_checked } => (
                "non-realizable",
                serde_json::json!({ "m": m, "classes_checked": classes_checked }),
                None,
            ),
            Status::Unknown { m, budget, seed } => (
                "unknown",
                serde_json::json!({ "m": m, "budget": budget, "seed": seed }),
                None,
            ),
            Status::Pending => ("pending", serde_json::Value::Null, None),
        };
        let mut r = ResultRecord::new(
            &format!("class/{i:03}"),
            "realizability",
            true,
            serde_json::json!({
                "dim": n.dim,
                "min_weight": n.min_weight,
                "dual_min_weight": n.dual_min_weight,
                "aut_order": n.aut_order.to_string(),
                "label": n.label,
                "code": code_file,
                "witness": witness_file,
                "detail": detail,
            }),
        );
        r.verdict = verdict.to_string();
        r.seed = seed;
        manifest.push_str(&serde_json::to_string(&r)?);
        manifest.push('\n');
    }
    fs::write(dir.join("manifest.jsonl"), manifest)?;
    fs::write(dir.join(DAG_FILE), serde_json::to_string(dag)?)?;
    Ok(())
}
