//! Optional `key = value` settings file. Command-line flags take precedence.

use std::collections::BTreeMap;

use qpbw::verify::Mode;
use qpbw::AlgebraId;

#[derive(Clone, Debug, Default)]
pub struct Config {
    max_height: BTreeMap<AlgebraId, i32>,
    intertwine_height: BTreeMap<AlgebraId, i32>,
    pub tetra_max_occ: Option<i32>,
    pub tetra_mode: Option<Mode>,
    pub reflect_max_occ: Option<i32>,
    pub reflect_mode: Option<Mode>,
}

impl Config {
    /// Keys: `max_height`, `max_height.<algebra>`, `intertwine_height`,
    /// `intertwine_height.<algebra>`, `tetra.max_occ`, `tetra.mode`,
    /// `reflect3d.max_occ`, `reflect3d.mode`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Config, String> {
        let mut c = Config::default();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| format!("line {}: {msg}: `{raw}`", n + 1);
            let (key, value) = line.split_once('=').ok_or_else(|| err("expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            let int = || value.parse::<i32>().ok().filter(|v| *v >= 0).ok_or_else(|| err("expected a nonnegative integer"));
            let mode = || value.parse::<Mode>().map_err(|_| err("expected exact or sampled"));
            let (base, algebra) = match key.split_once('.') {
                Some((b, a)) if b == "max_height" || b == "intertwine_height" => {
                    (b, Some(a.parse::<AlgebraId>().map_err(|_| err("unknown algebra"))?))
                }
                _ => (key, None),
            };
            let targets = algebra.map(|a| vec![a]).unwrap_or_else(|| AlgebraId::ALL.to_vec());
            match base {
                "max_height" => {
                    let v = int()?;
                    targets.into_iter().for_each(|a| {
                        c.max_height.insert(a, v);
                    });
                }
                "intertwine_height" => {
                    let v = int()?;
                    targets.into_iter().for_each(|a| {
                        c.intertwine_height.insert(a, v);
                    });
                }
                "tetra.max_occ" => c.tetra_max_occ = Some(int()?),
                "tetra.mode" => c.tetra_mode = Some(mode()?),
                "reflect3d.max_occ" => c.reflect_max_occ = Some(int()?),
                "reflect3d.mode" => c.reflect_mode = Some(mode()?),
                _ => return Err(err("unknown key")),
            }
        }
        Ok(c)
    }

    pub fn max_height(&self, id: AlgebraId) -> i32 {
        self.max_height.get(&id).copied().unwrap_or_else(|| qpbw::verify::default_height(id))
    }

    pub fn intertwine_height(&self, id: AlgebraId) -> i32 {
        self.intertwine_height.get(&id).copied().unwrap_or_else(|| qpbw::verify::default_intertwine_height(id))
    }
}
