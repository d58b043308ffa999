#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "xmodcat/crossed_module.hpp"

namespace xmodcat {

struct NamedModule {
  std::string name;
  ValidatedModule module;
};

/// The built-in corpus: conjugation modules of S3, Q8, D4 (with Gamma trivial
/// and Z2 acting by an inner involution) and a handful of abelian ones.
std::vector<NamedModule> catalog_modules();
/// Throws SchemaError for unknown names.
ValidatedModule catalog_module(const std::string& name);

/// Z2 acting on g by conjugation with x (x^2 must be central).
GammaAction inner_involution(const FiniteGroup& g, Elem x);

/// All subgroups of a group of order <= 64, sorted.
std::vector<ElemSet> all_subgroups(const FiniteGroup& g);

/// A random validated module with |B|, |D| <= max_order and |Gamma| <= 2.
BraidedGammaCrossedModule random_module(std::mt19937_64& rng, int max_order = 8);

struct Mutation {
  int table = 0;  // 0 eta, 1 theta, 2 actB, 3 actD
  std::size_t index = 0;
  Elem value = 0;
};

/// A single-entry change of the eta, theta or action tables.
Mutation random_mutation(const BraidedGammaCrossedModule& m, std::mt19937_64& rng);
BraidedGammaCrossedModule apply_mutation(BraidedGammaCrossedModule m, const Mutation& mu);

/// Seed from XMODCAT_SEED when set, else the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

}  // namespace xmodcat
