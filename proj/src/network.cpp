// Copyright (C) 2026 The paln authors
// SPDX-License-Identifier: Apache-2.0
