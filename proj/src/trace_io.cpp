#include "swim/contact_log.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "swim/error.hpp"
#include "swim/text.hpp"

namespace swim {

void sort_by_time(std::vector<ContactRecord>& records)
{
    std::sort(records.begin(), records.end(), [](const ContactRecord& l, const ContactRecord& r) {
        return std::tie(l.t_start, l.a, l.b, l.t_end) < std::tie(r.t_start, r.a, r.b, r.t_end);
    });
}

void normalize(ContactLog& log)
{
    for (auto& r : log.records) {
        if (r.a == r.b)
            throw Error("self-contact of node " + std::to_string(r.a));
        if (r.t_end < r.t_start)
            throw Error("contact ends before it starts");
        if (r.a > r.b)
            std::swap(r.a, r.b);
    }
    auto& recs = log.records;
    std::sort(recs.begin(), recs.end(), [](const ContactRecord& l, const ContactRecord& r) {
        return std::tie(l.a, l.b, l.t_start, l.t_end) < std::tie(r.a, r.b, r.t_start, r.t_end);
    });
    std::vector<ContactRecord> merged;
    merged.reserve(recs.size());
    for (const auto& r : recs) {
        if (!merged.empty()) {
            auto& last = merged.back();
            if (last.a == r.a && last.b == r.b && r.t_start <= last.t_end) {
                last.t_end = std::max(last.t_end, r.t_end);
                continue;
            }
        }
        merged.push_back(r);
    }
    sort_by_time(merged);
    recs = std::move(merged);
}

namespace {

struct Header {
    std::size_t nodes;
    double span_start;
    double span_end;
};

std::optional<Header> parse_header(std::string_view line)
{
    line = trim(line);
    if (!line.starts_with('#'))
        return std::nullopt;
    line = trim(line.substr(1));
    if (!line.starts_with("nodes="))
        return std::nullopt;
    auto sp = line.find(" span=");
    if (sp == std::string_view::npos)
        return std::nullopt;
    auto nodes = parse_number<std::size_t>(trim(line.substr(6, sp - 6)));
    auto span = trim(line.substr(sp + 6));
    auto comma = span.find(',');
    if (!nodes || comma == std::string_view::npos)
        return std::nullopt;
    auto s = parse_number<double>(trim(span.substr(0, comma)));
    auto e = parse_number<double>(trim(span.substr(comma + 1)));
    if (!s || !e)
        return std::nullopt;
    return Header{*nodes, *s, *e};
}

std::vector<std::string_view> tokens(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        pos = line.find_first_not_of(" \t\r", pos);
        if (pos == std::string_view::npos)
            break;
        auto e = line.find_first_of(" \t\r", pos);
        out.push_back(line.substr(pos, e == std::string_view::npos ? e : e - pos));
        if (e == std::string_view::npos)
            break;
        pos = e;
    }
    return out;
}

} // namespace

ContactLog parse_contact_trace(std::string_view text, double t0)
{
    const auto all = lines(text);
    std::optional<Header> header;
    if (!all.empty())
        header = parse_header(all.front());

    ContactLog log;
    std::unordered_map<long long, NodeId> ids;
    std::vector<long long> order;
    auto map_id = [&](long long raw, std::size_t line_no) -> NodeId {
        if (header) {
            if (raw < 0 || static_cast<std::size_t>(raw) >= header->nodes)
                throw ParseError(line_no, "node id " + std::to_string(raw) + " outside [0, "
                                              + std::to_string(header->nodes) + ")");
            return static_cast<NodeId>(raw);
        }
        auto [it, fresh] = ids.try_emplace(raw, order.size());
        if (fresh)
            order.push_back(raw);
        return it->second;
    };

    for (std::size_t i = 0; i < all.size(); ++i) {
        const std::size_t line_no = i + 1;
        auto body = trim(strip_comment(all[i]));
        if (body.empty())
            continue;
        auto tok = tokens(body);
        if (tok.size() < 4)
            throw ParseError(line_no, "expected 'a b t_start t_end'");
        auto a = parse_number<long long>(tok[0]);
        auto b = parse_number<long long>(tok[1]);
        auto s = parse_number<double>(tok[2]);
        auto e = parse_number<double>(tok[3]);
        if (!a || !b)
            throw ParseError(line_no, "node ids must be integers");
        if (!s || !e || !std::isfinite(*s) || !std::isfinite(*e))
            throw ParseError(line_no, "timestamps must be numbers");
        if (*a == *b)
            throw ParseError(line_no, "self-contact of node " + std::to_string(*a));
        if (*e < *s)
            throw ParseError(line_no, "t_end < t_start");
        NodeId ia = map_id(*a, line_no);
        NodeId ib = map_id(*b, line_no);
        log.records.push_back({ia, ib, *s - t0, *e - t0});
    }

    if (header) {
        log.num_nodes = header->nodes;
        log.span_start = header->span_start - t0;
        log.span_end = header->span_end - t0;
    } else {
        log.num_nodes = order.size();
        if (!log.records.empty()) {
            log.span_start = log.records.front().t_start;
            log.span_end = log.records.front().t_end;
            for (const auto& r : log.records) {
                log.span_start = std::min(log.span_start, r.t_start);
                log.span_end = std::max(log.span_end, r.t_end);
            }
        }
    }
    normalize(log);
    return log;
}

std::string write_contact_trace(const ContactLog& log)
{
    std::vector<ContactRecord> recs = log.records;
    sort_by_time(recs);
    std::string out = "# nodes=" + std::to_string(log.num_nodes) + " span="
                      + format_fixed3(log.span_start) + "," + format_fixed3(log.span_end) + "\n";
    for (const auto& r : recs) {
        out += std::to_string(r.a);
        out += ' ';
        out += std::to_string(r.b);
        out += ' ';
        out += format_fixed3(r.t_start);
        out += ' ';
        out += format_fixed3(r.t_end);
        out += '\n';
    }
    return out;
}

} // namespace swim
