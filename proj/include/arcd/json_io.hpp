#pragma once

#include <string>
#include <vector>

#include "arcd/algebra.hpp"
#include "arcd/scalars.hpp"

namespace arcd {

// JSON renderings used by the command line tool and by verification failure
// reports. All of them are byte-stable: object keys come out alphabetically
// and terms follow the basis order.

// {"bottom":"^v","orient":"^v","top":"vv"}
std::string triple_to_json(const OrientedTriple& t);

// [{"bottom":...,"coeff":{"im":0,"re":1},"orient":...,"top":...},...]
std::string element_to_json(const Element& x);

// [{"bottom":...,"degree":0,"orient":...,"top":...},...]
std::string basis_to_json(const std::vector<OrientedTriple>& basis);

// {"coeffs":{"0":2,"1":2,"2":1}} keyed by exponent.
std::string poly_to_json(const LaurentPoly& p);

// Parses "bottom,orient,top" into a triple of length-n weights. Throws
// std::invalid_argument on malformed weights, wrong lengths, or an
// orientation that does not orient both halves.
OrientedTriple parse_triple(const std::string& text, int n);

}  // namespace arcd
