from apollonian.main import main

raise SystemExit(main())
