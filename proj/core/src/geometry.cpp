#include "evifuse/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace evifuse {

void require_valid(const Box& b, const char* what) {
    if (!b.valid()) {
        throw ValidationError(std::string(what) + ": invalid box [" + std::to_string(b.x0) +
                              "," + std::to_string(b.y0) + "," + std::to_string(b.x1) + "," +
                              std::to_string(b.y1) + "]");
    }
}

std::int64_t area(const Box& b) {
    return static_cast<std::int64_t>(b.x1 - b.x0) * (b.y1 - b.y0);
}

Box union_box(const Box& a, const Box& b) {
    return {std::min(a.x0, b.x0), std::min(a.y0, b.y0), std::max(a.x1, b.x1),
            std::max(a.y1, b.y1)};
}

std::optional<Box> intersect(const Box& a, const Box& b) {
    Box r{std::max(a.x0, b.x0), std::max(a.y0, b.y0), std::min(a.x1, b.x1),
          std::min(a.y1, b.y1)};
    if (r.x0 >= r.x1 || r.y0 >= r.y1) return std::nullopt;
    return r;
}

double iou(const Box& a, const Box& b) {
    auto inter = intersect(a, b);
    if (!inter) return 0.0;
    const std::int64_t ai = area(*inter);
    return static_cast<double>(ai) / static_cast<double>(area(a) + area(b) - ai);
}

double coverage(const Box& a, const Box& h) {
    auto inter = intersect(a, h);
    if (!inter) return 0.0;
    return static_cast<double>(area(*inter)) / static_cast<double>(area(h));
}

BinaryMask BinaryMask::zeros(int width, int height) {
    BinaryMask m;
    m.width = width;
    m.height = height;
    m.data.assign(static_cast<std::size_t>(width) * height, 0);
    return m;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

void unite(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

std::vector<Component> connected_components(const BinaryMask& mask) {
    if (mask.data.size() != static_cast<std::size_t>(mask.width) * mask.height) {
        throw ValidationError("connected_components: mask data length != width*height");
    }

    // Row runs linked by column overlap against the previous row.
    std::vector<PixelRun> runs;
    std::vector<std::size_t> parent;
    std::size_t prev_begin = 0, prev_end = 0;

    for (int y = 0; y < mask.height; ++y) {
        const std::size_t row_begin = runs.size();
        int x = 0;
        while (x < mask.width) {
            if (!mask.at(y, x)) {
                ++x;
                continue;
            }
            int x0 = x;
            while (x < mask.width && mask.at(y, x)) ++x;
            runs.push_back({y, x0, x});
            parent.push_back(parent.size());
        }
        const std::size_t row_end = runs.size();
        for (std::size_t i = row_begin; i < row_end; ++i) {
            for (std::size_t j = prev_begin; j < prev_end; ++j) {
                if (runs[i].x0 < runs[j].x1 && runs[j].x0 < runs[i].x1) {
                    unite(parent, i, j);
                }
            }
        }
        prev_begin = row_begin;
        prev_end = row_end;
    }

    // Group runs by root, preserving scan order within each component.
    std::vector<std::size_t> root_of(runs.size());
    std::vector<std::size_t> order;  // distinct roots in first-seen order
    std::vector<std::size_t> slot(runs.size(), SIZE_MAX);
    for (std::size_t i = 0; i < runs.size(); ++i) {
        root_of[i] = find_root(parent, i);
        if (slot[root_of[i]] == SIZE_MAX) {
            slot[root_of[i]] = order.size();
            order.push_back(root_of[i]);
        }
    }

    std::vector<Component> components(order.size());
    for (std::size_t i = 0; i < runs.size(); ++i) {
        Component& c = components[slot[root_of[i]]];
        const PixelRun& r = runs[i];
        if (c.runs.empty()) {
            c.bbox = {r.x0, r.y, r.x1, r.y + 1};
        } else {
            c.bbox.x0 = std::min(c.bbox.x0, r.x0);
            c.bbox.x1 = std::max(c.bbox.x1, r.x1);
            c.bbox.y1 = std::max(c.bbox.y1, r.y + 1);
        }
        c.runs.push_back(r);
        c.pixel_count += r.x1 - r.x0;
    }

    std::stable_sort(components.begin(), components.end(),
                     [](const Component& a, const Component& b) {
                         if (a.bbox.y0 != b.bbox.y0) return a.bbox.y0 < b.bbox.y0;
                         return a.bbox.x0 < b.bbox.x0;
                     });
    return components;
}

}  // namespace evifuse
