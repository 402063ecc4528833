#pragma once

#include <iosfwd>
#include <string>

#include "eumin/multigraph.hpp"
#include "eumin/planarity.hpp"
#include "eumin/trace.hpp"

namespace eumin {

// Line-oriented text formats; '#' starts a comment, blank lines ignored.
//
// multigraph            trace files:  <multigraph block>
// v <vertex-count>                    <one op per line>
// e <edge-id> <u> <w>                 target:
// f <free-loop-count>                 <multigraph block>
//
// op lines: contract <e> | delcycle <e>... | delvertex <v>
//           | demote <v> <h1> <h2> witness <e>... | subdiv <e>
//           | subdivfree | merge <u> <w>
//
// The parser rejects dangling endpoints, duplicate edge ids and non-dense
// ids. Writers emit edges in ascending id order, so output is bit-exact.

std::string format_multigraph(const Multigraph& g);
Multigraph parse_multigraph(const std::string& text);
Multigraph parse_multigraph(std::istream& in);

std::string format_trace(const Trace& t);
Trace parse_trace(const std::string& text);
Trace parse_trace(std::istream& in);

std::string format_op(const TraceOp& op);
TraceOp parse_op(const std::string& line);

/// Embedding dump: the multigraph block followed by `rot <v>: <h>...` lines.
std::string format_embedding(const Multigraph& g, const RotationSystem& rot);

/// True when the text contains a `target:` line (a trace, not a bare graph).
bool looks_like_trace(const std::string& text);

} // namespace eumin
