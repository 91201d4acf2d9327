// Copyright 2026 The Oneway Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oneway/cluster/lattice.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace oneway {

Lattice::Lattice(std::vector<int> extents) : extents_(std::move(extents)) {
    if (extents_.empty() || extents_.size() > 3) {
        throw std::invalid_argument("A lattice needs 1 to 3 axes.");
    }
    size_t n = 1;
    for (int e : extents_) {
        if (e < 1) {
            throw std::invalid_argument("Lattice extents must be positive.");
        }
        n *= (size_t)e;
    }
    occupied_.assign(n, true);
}

size_t Lattice::occupied_count() const {
    return std::count(occupied_.begin(), occupied_.end(), true);
}

bool Lattice::in_bounds(const Site &s) const {
    for (size_t k = 0; k < 3; k++) {
        int extent = k < rank() ? extents_[k] : 1;
        if (s[k] < 0 || s[k] >= extent) {
            return false;
        }
    }
    return true;
}

bool Lattice::occupied(const Site &s) const {
    return in_bounds(s) && occupied_[label(s)];
}

void Lattice::set_occupied(const Site &s, bool value) {
    occupied_[label(s)] = value;
}

Label Lattice::label(const Site &s) const {
    if (!in_bounds(s)) {
        throw std::invalid_argument("Site (" + format(s) + ") is outside the lattice.");
    }
    size_t index = 0;
    for (size_t k = 0; k < rank(); k++) {
        index = index * extents_[k] + s[k];
    }
    return (Label)index;
}

Site Lattice::site(Label label) const {
    if (label >= site_count()) {
        throw std::invalid_argument("Label " + std::to_string(label) + " is outside the lattice.");
    }
    Site s;
    size_t rest = label;
    for (size_t k = rank(); k-- > 0;) {
        s[k] = (int)(rest % extents_[k]);
        rest /= extents_[k];
    }
    return s;
}

std::vector<Site> Lattice::occupied_sites() const {
    std::vector<Site> out;
    for (size_t k = 0; k < occupied_.size(); k++) {
        if (occupied_[k]) {
            out.push_back(site((Label)k));
        }
    }
    return out;
}

std::vector<Site> Lattice::neighbors(const Site &s) const {
    if (!occupied(s)) {
        throw std::invalid_argument("Site (" + format(s) + ") is not occupied.");
    }
    std::vector<Site> out;
    // Lexicographic order: lower neighbors from the first axis to the last, then upper ones from
    // the last axis to the first.
    for (size_t k = 0; k < rank(); k++) {
        Site t = s;
        t[k]--;
        if (occupied(t)) {
            out.push_back(t);
        }
    }
    for (size_t k = rank(); k-- > 0;) {
        Site t = s;
        t[k]++;
        if (occupied(t)) {
            out.push_back(t);
        }
    }
    return out;
}

std::vector<std::pair<Site, Site>> Lattice::edges() const {
    std::vector<std::pair<Site, Site>> out;
    for (const auto &a : occupied_sites()) {
        for (const auto &b : neighbors(a)) {
            if (a < b) {
                out.emplace_back(a, b);
            }
        }
    }
    return out;
}

std::string Lattice::format(const Site &s) const {
    std::stringstream ss;
    size_t r = std::max<size_t>(rank(), 1);
    for (size_t k = 0; k < r; k++) {
        ss << (k ? "," : "") << s[k];
    }
    return ss.str();
}

Lattice Lattice::parse(std::string_view text) {
    std::stringstream in{std::string(text)};
    std::string line;
    Lattice result;
    bool have_header = false;
    size_t line_number = 0;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("lattice line " + std::to_string(line_number) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_number++;
        line = line.substr(0, line.find('#'));
        std::stringstream words(line);
        std::string keyword;
        if (!(words >> keyword)) {
            continue;
        }
        std::vector<int> values;
        std::string token;
        while (words >> token) {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (used != token.size()) {
                fail("expected an integer but got '" + token + "'");
            }
            values.push_back(v);
        }
        if (keyword == "lattice") {
            if (have_header) {
                fail("duplicate lattice header");
            }
            if (values.empty() || values.size() > 3) {
                fail("expected 1 to 3 extents");
            }
            try {
                result = Lattice(values);
            } catch (const std::invalid_argument &ex) {
                fail(ex.what());
            }
            have_header = true;
        } else if (keyword == "hole") {
            if (!have_header) {
                fail("hole before lattice header");
            }
            if (values.size() != result.rank()) {
                fail("hole needs " + std::to_string(result.rank()) + " coordinates");
            }
            Site s;
            for (size_t k = 0; k < values.size(); k++) {
                s[k] = values[k];
            }
            if (!result.in_bounds(s)) {
                fail("hole is outside the lattice");
            }
            result.set_occupied(s, false);
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
    }
    if (!have_header) {
        throw std::invalid_argument("lattice: missing 'lattice' header line");
    }
    return result;
}

std::string Lattice::str() const {
    std::stringstream ss;
    ss << "lattice";
    for (int e : extents_) {
        ss << " " << e;
    }
    ss << "\n";
    for (size_t k = 0; k < occupied_.size(); k++) {
        if (!occupied_[k]) {
            Site s = site((Label)k);
            ss << "hole";
            for (size_t a = 0; a < rank(); a++) {
                ss << " " << s[a];
            }
            ss << "\n";
        }
    }
    return ss.str();
}

}  // namespace oneway
