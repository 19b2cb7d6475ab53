//! Control server, three evaluation servers and an asynchronous client, all
//! inside one process on loopback.

use std::time::Duration;

use zeroth::bench::{DimSpec, ObjectiveSpec};
use zeroth::dist::{AsyncClient, ControlServer, EvalServer};
use zeroth::Parameter;

fn main() -> zeroth::Result<()> {
    let control = ControlServer::bind("127.0.0.1:0")?.spawn()?;
    let control_addr = control.addr().to_string();
    let servers = (0..3)
        .map(|_| EvalServer::bind("127.0.0.1:0", &control_addr)?.spawn())
        .collect::<zeroth::Result<Vec<_>>>()?;

    let spec = ObjectiveSpec::new("ackley", DimSpec::continuous(6, -1.0, 1.0)).with_param("delay_loops", 20_000);
    let mut client = AsyncClient::connect(&control_addr, 3, &spec, Duration::from_secs(5))?;
    println!("leased {:?}", client.servers());
    let best = client.optimize(&Parameter::new(600).with_seed(2))?;
    println!("best {:.4} after {} evaluations; {:?}", best.score(), client.history().len(), client.stats());
    client.close()?;

    for s in servers {
        s.shutdown()?;
    }
    control.shutdown()
}
