from a051221.cli import main

raise SystemExit(main())
