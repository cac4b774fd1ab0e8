// Copyright 2026 The Plusdraw Authors
// SPDX-License-Identifier: Apache-2.0

namespace plusdraw {
}  // namespace plusdraw
