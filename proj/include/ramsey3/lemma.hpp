#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ramsey3/core.hpp"
#include "ramsey3/patterns.hpp"

namespace ramsey3 {

/// Raised when purify() is handed a hypergraph that contains P.
class NotPFree : public InvalidInput {
  public:
    explicit NotPFree(Embedding witness);
    const Embedding& witness() const noexcept { return witness_; }

  private:
    Embedding witness_;
};

class NoFPresent : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

enum class ComponentClass {
    HasCLarge,   // contains C, at least 7 vertices: deleted entirely
    HasCSix,     // contains C, exactly 6 vertices: reduced to a star
    FComponent,  // contains F but not C: minimum F hitting set removed
    Clean,
};

std::string_view to_string(ComponentClass cls) noexcept;

struct ComponentRecord {
    std::vector<VertexId> vertices;
    std::size_t edge_count = 0;
    ComponentClass cls = ComponentClass::Clean;
    std::vector<Triple> deleted;
    std::optional<VertexId> star_center;  // HasCSix only
    bool exceeds_four = false;            // FComponent needing more than 4 deletions

    std::size_t order() const noexcept { return vertices.size(); }
};

struct DeletionCertificate {
    std::size_t order = 0;
    std::size_t edge_count = 0;
    std::vector<Triple> deleted;  // lexicographic
    std::vector<ComponentRecord> ledger;
    std::size_t total_deleted = 0;
};

/// Deletes fewer than 3·order edges from a P-free hypergraph so that no C
/// and no F remain, component by component:
///   C and ≥ 7 vertices  -> delete everything (at most 3n_i - 8 edges, a
///                          cited bound that is asserted, not assumed)
///   C and 6 vertices    -> keep the star of a maximum-degree vertex
///   F, no C             -> the component has 5 vertices; remove a minimum
///                          F hitting set
///   otherwise           -> untouched
///
/// Throws OrderTooSmall below 5 vertices, NotPFree if the input contains P,
/// and Falsification if any asserted fact fails or the residual still
/// contains C or F.
DeletionCertificate purify(const Hypergraph& h);

/// Minimum set of edges whose removal leaves no F, for a hypergraph whose
/// edges span exactly 5 vertices. Smallest size first, then lexicographic.
std::vector<Triple> destroy_f_component(const Hypergraph& comp);

/// The hypergraph left after removing the certificate's deletions.
Hypergraph residual(const Hypergraph& h, const DeletionCertificate& cert);

/// Re-checks every certificate invariant against h; throws Falsification.
void verify_certificate(const Hypergraph& h, const DeletionCertificate& cert);

}  // namespace ramsey3
