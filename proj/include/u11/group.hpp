#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "u11/kernels.hpp"
#include "u11/mat.hpp"

namespace u11 {

struct ConjClasses {
  std::vector<uint32_t> reps;      // ascending element indices; reps[0] is the identity class
  std::vector<uint32_t> class_of;  // element index -> class id
  std::vector<uint64_t> sizes;
};

class SubgroupTable;
using TablePtr = std::shared_ptr<const SubgroupTable>;

/// An enumerated subgroup of K/K_N. Standalone: carries its own element list
/// (identity first), hash index and, when known, generators. Tables built as
/// set products additionally record one factorization per element.
class SubgroupTable {
public:
  RingCtx ctx;
  std::string label;
  std::vector<ElemCode> elems;
  std::vector<ElemCode> gens;

  // set when built by product_tables(): elems[i] = left[fac_li[i]] * right[fac_ri[i]]
  TablePtr fac_left, fac_right;
  std::vector<uint32_t> fac_li, fac_ri;

  size_t size() const { return elems.size(); }
  int64_t find(const ElemCode& e) const { return index_.find(e); }
  bool contains(const ElemCode& e) const { return index_.find(e) >= 0; }
  uint32_t need(const ElemCode& e) const;
  const kern::Batch& soa() const;

  void rebuild_index();

private:
  CodeIndex index_;
  mutable std::unique_ptr<kern::Batch> soa_;
};

TablePtr table_from_elems(const RingCtx& R, std::string label, std::vector<ElemCode> elems,
                          std::vector<ElemCode> gens);

/// Breadth-first closure of the generators; every element must satisfy the
/// membership predicate is_member_K. BudgetExceeded on overflow.
TablePtr closure_from(const RingCtx& R, std::string label, std::vector<ElemCode> gens,
                      uint64_t budget);

std::vector<ElemCode> k_generators(const RingCtx& R);
std::vector<ElemCode> km_generators(const RingCtx& R, int m);

/// Multiplicative generator of the order-(q^2-1) part of (O_E/p^N)^*.
Quad tame_generator(const RingCtx& R);

uint64_t order_K_mod_KN(const RingCtx& R);  // q(q-1)(q+1)^2 * q^{4(N-1)}

TablePtr enumerate_K(const RingCtx& R, uint64_t budget);
TablePtr filtration_subgroup(const RingCtx& R, int m, uint64_t budget);
TablePtr borel_table(const RingCtx& R, uint64_t budget);
TablePtr torus_table(const RingCtx& R, int m);        // T_0 or T_m image
TablePtr split_torus_table(const RingCtx& R, int m);  // S_0 or S_m image
TablePtr center_table(const RingCtx& R);
TablePtr unipotent_table(const RingCtx& R);
TablePtr j_table(const RingCtx& R, int d, uint64_t budget);  // LevelTooLow if N < ceil((d+1)/2)

/// Dispatch by symbolic name: Borel, Torus0, TorusFilt, SplitTorus0, Center,
/// UnipotentK, J, ZUJ (param = filtration level / depth where applicable).
TablePtr named_subgroup(const RingCtx& R, const std::string& name, int param, uint64_t budget);

TablePtr product_tables(TablePtr A, TablePtr B, std::string label, uint64_t budget);
TablePtr intersect_tables(const SubgroupTable& A, const SubgroupTable& B, std::string label);
bool is_subset(const SubgroupTable& H, const SubgroupTable& G);
bool tables_equal(const SubgroupTable& A, const SubgroupTable& B);

/// Left-coset representatives of G/H, ascending by G index. NotSubgroup if H is not in G.
std::vector<uint32_t> transversal(const SubgroupTable& G, const SubgroupTable& H);

/// One representative per H1\G/H2 orbit, ascending by G index.
std::vector<uint32_t> double_cosets(const SubgroupTable& G, const SubgroupTable& H1,
                                    const SubgroupTable& H2);

/// Orbit closure under conjugation by the generators. Tables without
/// generators are accepted only when exhaustively verified abelian.
const ConjClasses& conjugacy_classes(const SubgroupTable& G);
ConjClasses compute_conjugacy_classes(const SubgroupTable& G);

/// Randomized closure probes (product and inverse membership); exhaustive
/// when |G| is small. Returns false instead of throwing.
bool closure_probe(const SubgroupTable& G, int trials = 64);

// ---- disk cache (textual, one element per line as 8 decimal residues) ----

void save_table(const SubgroupTable& T, const std::string& dir);
TablePtr load_table(const RingCtx& R, const std::string& label, const std::string& dir);
void save_classes(const SubgroupTable& T, const ConjClasses& C, const std::string& dir);
std::optional<ConjClasses> load_classes(const SubgroupTable& T, const std::string& dir);

}  // namespace u11
