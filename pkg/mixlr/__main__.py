# SPDX-FileCopyrightText: 2026 mixlr contributors
#
# SPDX-License-Identifier: MIT

"""``python -m mixlr``"""

import sys

from mixlr.cli import main

if __name__ == "__main__":
    sys.exit(main())
