#pragma once

// q-characters of two-row shapes and the q-binomial identities.

#include "swfusion/partition.hpp"
#include "swfusion/qpoly.hpp"

namespace swf {

/// Gaussian binomial [m choose k]_q via the q-Pascal recurrence.
QPoly gauss_binomial(int m, int k);

/// Sum of q^{|lambda|} over partitions in the k x k box, by enumeration.
QPoly box_partition_gf(int k);

/// Sum of q^{maj(tau)} over SYT of a shape with at most two rows.
QPoly maj_gf(const Partition& shape);

/// q^{b(shape)} [N]_q! / prod_cells [hook]_q, the closed-form maj
/// generating function. Division is checked for exactness.
QPoly qhook_maj_gf(const Partition& shape);

/// K_{lambda,1^N}(q) as the charge generating function over SYT(lambda).
QPoly kostka_foulkes_column(const Partition& lambda, int N);

/// q^{N(N-1)/2} K_{(n+k,n-k),1^N}(1/q), computed by coefficient reversal.
QPoly multiplicity_qcharacter(int k, int N);

}  // namespace swf
