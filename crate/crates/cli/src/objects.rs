use schurweyl::combinat::{parse_composition, Partition};
use schurweyl::exactla::Ring;
use schurweyl::polyfun::{divided, exterior, symmetric, tensor_power, Module};
use schurweyl::weylschur::{costandard_object, schur_module, simple_head, standard_object, weyl};

use crate::Failure;

/// A module named on the command line as `kind:parts`, e.g. `gamma:2,1`
/// or `delta:(2,1)`.
#[derive(Clone, Debug)]
pub struct ObjectSpec {
    pub kind: Kind,
    pub parts: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Gamma,
    Sym,
    Ext,
    Tensor,
    Delta,
    Nabla,
    Weyl,
    Schur,
    Simple,
}

impl ObjectSpec {
    pub fn parse(s: &str) -> Result<Self, Failure> {
        let (k, rest) = s.split_once(':').ok_or_else(|| Failure::Usage(format!("object '{s}' should look like kind:parts, e.g. gamma:2,1")))?;
        let kind = match k.trim() {
            "gamma" | "divided" => Kind::Gamma,
            "sym" | "symmetric" => Kind::Sym,
            "ext" | "exterior" | "lambda" => Kind::Ext,
            "tensor" => Kind::Tensor,
            "delta" => Kind::Delta,
            "nabla" => Kind::Nabla,
            "weyl" => Kind::Weyl,
            "schur" => Kind::Schur,
            "simple" => Kind::Simple,
            other => return Err(Failure::Usage(format!("unknown object kind '{other}'"))),
        };
        let parts = parse_composition(rest).map_err(|e| Failure::Usage(e.to_string()))?;
        if kind == Kind::Tensor && parts.len() != 1 {
            return Err(Failure::Usage("tensor takes a single degree, e.g. tensor:3".into()));
        }
        Ok(ObjectSpec { kind, parts })
    }

    pub fn of(kind: Kind, parts: &[usize]) -> Self {
        ObjectSpec { kind, parts: parts.to_vec() }
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    fn partition(&self) -> Result<Partition, Failure> {
        Partition::new(self.parts.clone()).map_err(|e| Failure::Usage(e.to_string()))
    }

    pub fn name(&self) -> String {
        let k = match self.kind {
            Kind::Gamma => "gamma",
            Kind::Sym => "sym",
            Kind::Ext => "ext",
            Kind::Tensor => "tensor",
            Kind::Delta => "delta",
            Kind::Nabla => "nabla",
            Kind::Weyl => "weyl",
            Kind::Schur => "schur",
            Kind::Simple => "simple",
        };
        let body: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        format!("{k}:{}", body.join(","))
    }

    pub fn build<R: Ring>(&self, n: usize, ring: &R) -> Result<Module<R>, Failure> {
        Ok(match self.kind {
            Kind::Gamma => divided(ring, n, &self.parts),
            Kind::Sym => symmetric(ring, n, &self.parts),
            Kind::Ext => exterior(ring, n, &self.parts),
            Kind::Tensor => tensor_power(ring, n, self.parts[0]),
            Kind::Delta => standard_object(&self.partition()?, n, ring)?.quotient,
            Kind::Nabla => costandard_object(&self.partition()?, n, ring)?,
            Kind::Weyl => weyl(&self.partition()?, n, ring)?.module,
            Kind::Schur => schur_module(&self.partition()?, n, ring)?.module,
            Kind::Simple => simple_head(&self.partition()?, n, ring)?.module,
        })
    }
}
