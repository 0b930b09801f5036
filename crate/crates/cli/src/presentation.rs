//! Raw surgery presentations as JSON files:
//! `{"framings": [2, 2, 3], "edges": [[0,1], [1,2]]}`.

use std::path::Path;

use serde::Deserialize;
use zeroconc::SurgeryPresentation;

#[derive(Deserialize)]
struct RawPresentation {
    framings: Vec<i64>,
    #[serde(default)]
    edges: Vec<(usize, usize)>,
}

pub fn load(path: &Path) -> anyhow::Result<SurgeryPresentation> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
    let raw: RawPresentation = serde_json::from_str(&text)
        .map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    Ok(SurgeryPresentation::new(raw.framings, raw.edges)?)
}

pub fn parse_covector(text: &str, n: usize) -> anyhow::Result<Vec<i64>> {
    let k: Vec<i64> = text
        .split(',')
        .map(|s| s.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| anyhow::anyhow!("bad covector '{text}': {e}"))?;
    if k.len() != n {
        anyhow::bail!("covector has {} entries for a {n}-component presentation", k.len());
    }
    Ok(k)
}
