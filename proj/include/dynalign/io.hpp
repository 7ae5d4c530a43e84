#ifndef DYNALIGN_IO_HPP
#define DYNALIGN_IO_HPP

#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dynalign/core.hpp"

namespace dynalign {

namespace detail {

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(field);
    return fields;
}

inline bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

inline double parse_number(const std::string& field, std::size_t line_no) {
    std::size_t used = 0;
    double value = 0;
    try {
        value = std::stod(field, &used);
    } catch (const std::exception&) {
        throw DataError("line " + std::to_string(line_no) + ": '" + field + "' is not a number");
    }
    if (used != field.size())
        throw DataError("line " + std::to_string(line_no) + ": '" + field + "' is not a number");
    return value;
}

inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace detail

// Event-list format: one `u v t_start t_end` per line, '#' starts a comment.
inline DynamicNetwork parse_event_list(std::istream& in) {
    DynamicNetwork::Builder builder;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_comment_or_blank(line)) continue;
        auto fields = detail::split_fields(line);
        if (fields.size() != 4)
            throw DataError("line " + std::to_string(line_no) + ": expected 'u v t_start t_end', got " +
                            std::to_string(fields.size()) + " fields");
        double ts = detail::parse_number(fields[2], line_no);
        double te = detail::parse_number(fields[3], line_no);
        try {
            builder.add_event(fields[0], fields[1], ts, te);
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return std::move(builder).build();
}

// Snapshot format: `u v t` with integer t >= 1 meaning edge (u,v) in snapshot t.
inline std::vector<StaticNetwork> parse_snapshots(std::istream& in) {
    std::vector<std::tuple<std::string, std::string, std::size_t>> entries;
    std::string line;
    std::size_t line_no = 0;
    std::size_t max_t = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_comment_or_blank(line)) continue;
        auto fields = detail::split_fields(line);
        if (fields.size() != 3)
            throw DataError("line " + std::to_string(line_no) + ": expected 'u v t'");
        double traw = detail::parse_number(fields[2], line_no);
        if (traw < 1 || traw != static_cast<double>(static_cast<std::size_t>(traw)))
            throw DataError("line " + std::to_string(line_no) + ": snapshot index must be an integer >= 1");
        std::size_t t = static_cast<std::size_t>(traw);
        max_t = std::max(max_t, t);
        entries.emplace_back(fields[0], fields[1], t);
    }
    if (entries.empty()) throw DataError("empty snapshot list");
    std::vector<StaticNetwork::Builder> builders(max_t);
    for (auto& [u, v, t] : entries) builders[t - 1].add_edge(u, v);
    std::vector<StaticNetwork> snapshots;
    snapshots.reserve(max_t);
    for (auto& b : builders) snapshots.push_back(std::move(b).build());
    return snapshots;
}

// Static edge-list format: `u v` per line.
inline StaticNetwork parse_edge_list(std::istream& in) {
    StaticNetwork::Builder builder;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_comment_or_blank(line)) continue;
        auto fields = detail::split_fields(line);
        if (fields.size() != 2)
            throw DataError("line " + std::to_string(line_no) + ": expected 'u v'");
        try {
            builder.add_edge(fields[0], fields[1]);
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return std::move(builder).build();
}

// Alignment format: `u v` per line, u from the smaller network, v from the larger.
template <typename NetA, typename NetB>
Alignment parse_alignment(std::istream& in, const NetA& net1, const NetB& net2) {
    std::vector<NodeIndex> mapping(net1.num_nodes(), 0);
    std::vector<bool> seen(net1.num_nodes(), false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::is_comment_or_blank(line)) continue;
        auto fields = detail::split_fields(line);
        if (fields.size() != 2)
            throw DataError("line " + std::to_string(line_no) + ": expected 'u v'");
        auto u = net1.index_of(fields[0]);
        auto v = net2.index_of(fields[1]);
        if (!u) throw DataError("line " + std::to_string(line_no) + ": unknown source node '" + fields[0] + "'");
        if (!v) throw DataError("line " + std::to_string(line_no) + ": unknown target node '" + fields[1] + "'");
        if (seen[*u]) throw DataError("line " + std::to_string(line_no) + ": node '" + fields[0] + "' mapped twice");
        seen[*u] = true;
        mapping[*u] = *v;
    }
    for (NodeIndex i = 0; i < net1.num_nodes(); ++i) {
        if (!seen[i]) throw DataError("alignment is missing node '" + net1.label(i) + "'");
    }
    return Alignment(std::move(mapping), net2.num_nodes());
}

// Writers emit a canonical ordering so identical networks serialize identically.

inline void write_event_list(const DynamicNetwork& net, std::ostream& out) {
    std::vector<std::tuple<std::string, std::string, Timestamp, Timestamp>> rows;
    rows.reserve(net.num_events());
    for (const Event& e : net.events()) {
        std::string lu = net.label(e.u), lv = net.label(e.v);
        if (lv < lu) std::swap(lu, lv);
        rows.emplace_back(std::move(lu), std::move(lv), e.t_start, e.t_end);
    }
    std::sort(rows.begin(), rows.end());
    for (auto& [u, v, ts, te] : rows) {
        out << u << ' ' << v << ' ' << detail::format_number(ts) << ' ' << detail::format_number(te)
            << '\n';
    }
}

inline void write_edge_list(const StaticNetwork& net, std::ostream& out) {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.reserve(net.num_edges());
    for (auto [u, v] : net.edges()) {
        std::string lu = net.label(u), lv = net.label(v);
        if (lv < lu) std::swap(lu, lv);
        rows.emplace_back(std::move(lu), std::move(lv));
    }
    std::sort(rows.begin(), rows.end());
    for (auto& [u, v] : rows) out << u << ' ' << v << '\n';
}

template <typename NetA, typename NetB>
void write_alignment(const Alignment& f, const NetA& net1, const NetB& net2, std::ostream& out) {
    for (NodeIndex i = 0; i < f.size(); ++i) {
        out << net1.label(i) << ' ' << net2.label(f[i]) << '\n';
    }
}

inline DynamicNetwork load_event_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return parse_event_list(in);
}

inline std::vector<StaticNetwork> load_snapshots_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return parse_snapshots(in);
}

inline StaticNetwork load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

}  // namespace dynalign

#endif  // DYNALIGN_IO_HPP
