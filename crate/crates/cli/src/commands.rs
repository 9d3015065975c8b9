use std::io::Write;

use num_bigint::BigUint;
use serde_json::{json, Value};
use sierpinski_core::closed_form::{
    degree_histogram_closed, edge_count, max_degree, min_degree, vertex_count, zagreb_table,
};
use sierpinski_core::verify::{cross_check, Census};
use sierpinski_core::{DegreeHistogram, SierpinskiParams};

use crate::Format;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success,
    ChecksFailed,
}

impl Status {
    fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Success
        } else {
            Status::ChecksFailed
        }
    }
}

fn write_json(out: &mut dyn Write, value: &Value) -> anyhow::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn histogram_json(h: &DegreeHistogram) -> Value {
    h.iter()
        .map(|(k, c)| json!({ "degree": k, "count": c.to_string() }))
        .collect()
}

fn labels(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| (v + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn info(
    params: &SierpinskiParams,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<Status> {
    let base = params.base();
    let classes = base.degree_classes();
    let t = params.t();
    if format == Format::Json {
        let class_json: Vec<Value> = classes
            .iter()
            .map(|(k, vs)| json!({ "degree": k, "vertices": vs.iter().map(|v| v + 1).collect::<Vec<_>>() }))
            .collect();
        write_json(
            out,
            &json!({
                "base": {
                    "vertices": base.order(),
                    "edges": base.edge_count(),
                    "min_degree": base.min_degree(),
                    "max_degree": base.max_degree(),
                    "degree_classes": class_json,
                },
                "t": t,
                "vertices": vertex_count(params).to_string(),
                "edges": edge_count(params).to_string(),
                "min_degree": min_degree(params),
                "max_degree": max_degree(params),
            }),
        )?;
        return Ok(Status::Success);
    }

    let rows = [
        ("base vertices", base.order().to_string()),
        ("base edges", base.edge_count().to_string()),
        ("base min degree", base.min_degree().to_string()),
        ("base max degree", base.max_degree().to_string()),
        ("t", t.to_string()),
        ("vertices", vertex_count(params).to_string()),
        ("edges", edge_count(params).to_string()),
        ("min degree", min_degree(params).to_string()),
        ("max degree", max_degree(params).to_string()),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (i, (key, value)) in rows.iter().enumerate() {
        writeln!(out, "{key:<width$}  {value}")?;
        if i == 3 {
            writeln!(out, "degree classes")?;
            for (k, vs) in classes.iter() {
                writeln!(out, "  {k}: {}", labels(vs))?;
            }
        }
    }
    Ok(Status::Success)
}

pub fn generate(
    params: &SierpinskiParams,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<Status> {
    let vertices = params.explicit_vertex_count()?;
    match format {
        Format::Ranks => {
            let edges = params.edge_ranks()?;
            writeln!(out, "{} {}", vertices, edges.len())?;
            for (u, v) in edges {
                writeln!(out, "{} {}", u + 1, v + 1)?;
            }
        }
        Format::Words => {
            for (u, v) in params.edges()? {
                writeln!(out, "{u} {v}")?;
            }
        }
        Format::Dot => {
            writeln!(out, "graph \"S(G,{})\" {{", params.t())?;
            for rank in 0..vertices {
                let word = params.unrank(&BigUint::from(rank))?;
                writeln!(out, "  {} [label=\"{word}\"];", rank + 1)?;
            }
            for (u, v) in params.edge_ranks()? {
                writeln!(out, "  {} -- {};", u + 1, v + 1)?;
            }
            writeln!(out, "}}")?;
        }
        Format::Text | Format::Json => unreachable!("rejected by format selection"),
    }
    Ok(Status::Success)
}

pub fn degseq(
    params: &SierpinskiParams,
    format: Format,
    oracle: bool,
    out: &mut dyn Write,
) -> anyhow::Result<Status> {
    let closed = degree_histogram_closed(params);
    let oracle_hist = if oracle {
        Some(Census::run(params)?.histogram())
    } else {
        None
    };
    let matches = oracle_hist.as_ref().map(|h| *h == closed);

    if format == Format::Json {
        let mut doc = json!({ "t": params.t(), "histogram": histogram_json(&closed) });
        if let Some(h) = &oracle_hist {
            doc["oracle"] = json!({ "histogram": histogram_json(h), "match": matches });
        }
        write_json(out, &doc)?;
    } else {
        write!(out, "{closed}")?;
        match (&oracle_hist, matches) {
            (_, Some(true)) => writeln!(out, "oracle: match")?,
            (Some(h), _) => {
                writeln!(out, "oracle: MISMATCH")?;
                for (k, c) in h.iter() {
                    writeln!(out, "  {k}: {c}")?;
                }
            }
            _ => {}
        }
    }
    Ok(Status::from_pass(matches != Some(false)))
}

pub fn zagreb(
    params: &SierpinskiParams,
    alphas: &[u32],
    format: Format,
    oracle: bool,
    out: &mut dyn Write,
) -> anyhow::Result<Status> {
    let table = zagreb_table(params, alphas)?;
    let census = if oracle {
        Some(Census::run(params)?)
    } else {
        None
    };
    let mut all_match = true;

    let mut records = Vec::new();
    let mut lines = Vec::new();
    for (alpha, value) in table.iter() {
        let brute = census.as_ref().map(|c| c.zagreb(alpha));
        let ok = brute.as_ref().map(|b| b == value);
        all_match &= ok != Some(false);
        let mut record = json!({ "alpha": alpha, "value": value.to_string() });
        let mut line = format!("Z_{alpha}: {value}");
        if let (Some(b), Some(ok)) = (&brute, ok) {
            record["oracle"] = json!(b.to_string());
            record["match"] = json!(ok);
            line.push_str(&format!(
                "  oracle={b} {}",
                if ok { "match" } else { "MISMATCH" }
            ));
        }
        records.push(record);
        lines.push(line);
    }

    if format == Format::Json {
        write_json(out, &json!({ "t": params.t(), "zagreb": records }))?;
    } else {
        for line in lines {
            writeln!(out, "{line}")?;
        }
    }
    Ok(Status::from_pass(all_match))
}

pub fn verify(
    params: &SierpinskiParams,
    label: &str,
    alpha_max: u32,
    format: Format,
    out: &mut dyn Write,
) -> anyhow::Result<Status> {
    let report = cross_check(params, label, alpha_max)?;
    if format == Format::Json {
        write_json(out, &serde_json::to_value(&report)?)?;
    } else {
        write!(out, "{report}")?;
    }
    Ok(Status::from_pass(report.overall))
}
