// Copyright 2026 The grc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "grc/gf/matrix.hpp"

namespace grc::codes {

using gf::FieldPtr;
using gf::Matrix;
using gf::Symbol;
using gf::Vec;

/// Per-node contents of a codeword, node i at index i.
using NodeContents = std::vector<Vec>;

/// Maps (helper h, failed f, slot j) to the matrix G_{h,f} that turns node
/// h's l stored symbols into the symbols it sends. The slot is the helper's
/// 1-based position in the sorted download list; codes with uniform
/// downloads ignore it.
using ProjectionFn = std::function<Matrix(int helper, int failed, int slot)>;

/// An F-linear regenerating code described by its generator: rows
/// [i*l, (i+1)*l) of the (n*l x M) generator produce node i's contents.
class LinearCode {
public:
    LinearCode(std::string name, FieldPtr field, int n, int k, int d, int l, Matrix generator,
               ProjectionFn projection);

    const std::string& name() const { return name_; }
    const FieldPtr& field() const { return field_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int d() const { return d_; }
    int l() const { return l_; }
    int M() const { return static_cast<int>(generator_.cols()); }
    const Matrix& generator() const { return generator_; }
    Matrix node_generator(int i) const;

    NodeContents encode(const Vec& file) const;
    /// Encodes `w` files at once (columns of an M x w matrix); node i gets
    /// an l x w block.
    std::vector<Matrix> encode_block(const Matrix& files) const;
    /// Recovers the file from the contents of the listed nodes (any k).
    Vec reconstruct(std::span<const int> nodes, const NodeContents& contents) const;

    Matrix repair_projection(int helper, int failed, int slot) const;

    /// Same code with the message reparameterised so that the listed k
    /// nodes store the file verbatim, in order.
    LinearCode systematic(std::vector<int> nodes) const;
    const std::vector<int>& systematic_nodes() const { return systematic_; }

private:
    void check_node(int i) const;

    std::string name_;
    FieldPtr field_;
    int n_;
    int k_;
    int d_;
    int l_;
    Matrix generator_;
    ProjectionFn projection_;
    std::vector<int> systematic_;
};

/// Builds a generator by applying a linear encoder to every unit file.
Matrix generator_from_encoder(const FieldPtr& field, int n, int l, int M,
                              const std::function<NodeContents(const Vec&)>& encode);

/// Matrices U_{h,f} recovering node f from the helpers' transmissions:
/// sum_h U_{h,f} G_{h,f} c_h = c_f for every codeword.
struct IpMatrixSet {
    int failed = -1;
    std::vector<int> helpers;
    std::vector<int> slots;
    std::vector<Matrix> projections;  ///< G_{h,f}, beta_h x l
    std::vector<Matrix> combiners;    ///< U_{h,f}, l x beta_h

    std::vector<int> downloads() const;
    /// Index of helper h in `helpers`; throws if absent.
    std::size_t position(int helper) const;
    /// S_{h,f} for the given helper content.
    Vec helper_symbols(int helper, const Vec& content) const;
    /// sum over the listed helpers of U_{h,f} S_{h,f}.
    Vec combine(std::span<const int> subset, const std::vector<Vec>& symbols) const;
};

/// Solves U * vstack(H_h) = target over the message space, where H_h are the
/// helpers' symbol maps (beta_h x M) and target is node f's generator
/// (l x M). Throws InconsistentSystem when the helpers cannot repair.
std::vector<Matrix> solve_ip_matrices(const Matrix& target, const std::vector<Matrix>& helper_maps);

/// Derives the IP matrices for repairing `failed` from `helpers`. Empty
/// `slots` assigns slot i+1 to helpers[i].
IpMatrixSet derive_ip_matrices(const LinearCode& code, int failed, std::vector<int> helpers,
                               std::vector<int> slots = {});

}  // namespace grc::codes
