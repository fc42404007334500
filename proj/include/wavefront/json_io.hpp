#ifndef WAVEFRONT_JSON_IO_HPP
#define WAVEFRONT_JSON_IO_HPP

#include <string>

#include "wavefront/endoscopy.hpp"
#include "wavefront/springer.hpp"
#include "wavefront/verify.hpp"

namespace wf {

/* JSON forms:
 *   Partition         [6,4,2]
 *   SignedPartition   {"lambda":[6,4,2],"class":"symp",
 *                      "eps":{"6":1,"4":-1,"2":1}}
 *   Symbol            {"X":[3,1],"Y":[2],"kind":"imp"}
 *   Quad              {"lp":[6,4,2],"ep":[1,-1,1],"lm":[],"em":[]}
 * Quad signs are positional over the distinct parts in decreasing
 * order. Parse errors raise errc::parse_error. */

Partition parse_partition(const std::string& s);
std::string partition_json(const Partition& p);

PClass parse_class(const std::string& s);
std::string class_name(PClass c);

SignedPartition parse_signed_partition(const std::string& s);
std::string signed_partition_json(const SignedPartition& sp);

Symbol parse_symbol(const std::string& s);
std::string symbol_json(const Symbol& s);

Quad parse_quad(const std::string& s);
std::string quad_json(const Quad& q);

std::string springer_datum_json(const SpringerDatum& d);
std::string induction_json(const InductionData& ind);
std::string suite_report_json(const SuiteReport& rep);

} // namespace wf

#endif
