mod common;

use std::collections::HashSet;
use std::io::BufReader;
use std::net::{TcpListener, TcpStream};
use std::sync::{Arc, Mutex};
use std::thread::JoinHandle;
use std::time::Duration;

use zeroth::bench::{DimSpec, ObjectiveSpec};
use zeroth::dist::evalserver::register_with;
use zeroth::dist::wire::{recv, send};
use zeroth::dist::{async_optimize, AsyncClient, ControlHandle, ControlServer, EvalHandle, EvalServer, Message};
use zeroth::{opt_min, Algorithm, Error, Parameter};

const WAIT: Duration = Duration::from_secs(5);

fn control() -> ControlHandle {
    ControlServer::bind("127.0.0.1:0").unwrap().spawn().unwrap()
}

fn eval_server(control: &ControlHandle) -> EvalHandle {
    EvalServer::bind("127.0.0.1:0", &control.addr().to_string()).unwrap().spawn().unwrap()
}

fn sphere_spec(d: usize) -> ObjectiveSpec {
    ObjectiveSpec::new("sphere", DimSpec::continuous(d, -1.0, 1.0))
}

fn exchange(stream: &TcpStream, msg: &str) -> Message {
    let mut w = stream;
    std::io::Write::write_all(&mut w, format!("{msg}\n").as_bytes()).unwrap();
    recv(&mut BufReader::new(stream)).unwrap().unwrap().unwrap()
}

/// A worker that answers `serve` evaluations of sphere and then drops its
/// connection without re-registering.
fn flaky_worker(control: &str, serve: usize) -> JoinHandle<()> {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let addr = listener.local_addr().unwrap().to_string();
    register_with(control, &addr).unwrap();
    std::thread::spawn(move || {
        let (stream, _) = listener.accept().unwrap();
        let mut reader = BufReader::new(stream.try_clone().unwrap());
        let mut writer = stream;
        let mut answered = 0;
        while let Some(Ok(msg)) = recv(&mut reader).unwrap() {
            let reply = match msg {
                Message::Task { .. } => Message::Ok,
                Message::Eval { id, x } => {
                    if answered == serve {
                        return;
                    }
                    answered += 1;
                    Message::Value { id, y: common::sphere(&x) }
                }
                _ => return,
            };
            send(&mut writer, &reply).unwrap();
        }
    })
}

#[test]
fn eval_before_task_is_rejected() {
    let c = control();
    let s = eval_server(&c);
    let stream = TcpStream::connect(s.addr()).unwrap();
    assert_eq!(
        exchange(&stream, r#"{"type":"eval","id":4,"x":[0.0]}"#),
        Message::Error { id: Some(4), reason: "no task bound".into() }
    );
    // the connection survives garbage
    match exchange(&stream, r#"{"type":"bogus"}"#) {
        Message::Error { id: None, reason } => assert!(reason.contains("unknown type"), "{reason}"),
        other => panic!("{other:?}"),
    }
    let task = Message::Task { objective: sphere_spec(2) }.encode();
    assert_eq!(exchange(&stream, &task), Message::Ok);
    assert_eq!(exchange(&stream, r#"{"type":"eval","id":5,"x":[1.0,2.0]}"#), Message::Value { id: 5, y: 5.0 });
    // dimension mismatch is reported per request
    match exchange(&stream, r#"{"type":"eval","id":6,"x":[1.0]}"#) {
        Message::Error { id: Some(6), .. } => {}
        other => panic!("{other:?}"),
    }
    drop(stream);
    s.shutdown().unwrap();
    c.shutdown().unwrap();
}

#[test]
fn bad_task_is_rejected() {
    let c = control();
    let s = eval_server(&c);
    let stream = TcpStream::connect(s.addr()).unwrap();
    let task = Message::Task { objective: ObjectiveSpec::new("nope", DimSpec::continuous(1, 0.0, 1.0)) }.encode();
    assert!(matches!(exchange(&stream, &task), Message::Error { .. }));
    drop(stream);
    s.shutdown().unwrap();
    c.shutdown().unwrap();
}

#[test]
fn control_rejects_nonpositive_requests() {
    let c = control();
    let stream = TcpStream::connect(c.addr()).unwrap();
    assert!(matches!(exchange(&stream, r#"{"type":"request_servers","n":0}"#), Message::Error { .. }));
    assert!(matches!(exchange(&stream, r#"{"type":"request_servers","n":-3}"#), Message::Error { .. }));
    assert_eq!(exchange(&stream, r#"{"type":"register","addr":"127.0.0.1:9"}"#), Message::Ok);
    assert_eq!(
        exchange(&stream, r#"{"type":"request_servers","n":4}"#),
        Message::Servers { addrs: vec!["127.0.0.1:9".into()] }
    );
    assert_eq!(exchange(&stream, r#"{"type":"request_servers","n":1}"#), Message::Servers { addrs: vec![] });
    assert_eq!(exchange(&stream, r#"{"type":"release","addrs":["127.0.0.1:9"]}"#), Message::Ok);
    assert_eq!(c.registry().lock().unwrap().free_count(), 1);
    drop(stream);
    c.shutdown().unwrap();
}

#[test]
fn leases_are_exclusive_under_concurrency() {
    let c = control();
    let addr = c.addr().to_string();
    for i in 0..6 {
        register_with(&addr, &format!("10.0.0.{i}:5000")).unwrap();
    }
    let held: Arc<Mutex<HashSet<String>>> = Arc::default();
    let clients: Vec<_> = (0..4)
        .map(|_| {
            let (addr, held) = (addr.clone(), held.clone());
            std::thread::spawn(move || {
                let stream = TcpStream::connect(&addr).unwrap();
                for _ in 0..50 {
                    let got = match exchange(&stream, r#"{"type":"request_servers","n":2}"#) {
                        Message::Servers { addrs } => addrs,
                        other => panic!("{other:?}"),
                    };
                    for a in &got {
                        assert!(held.lock().unwrap().insert(a.clone()), "{a} granted twice");
                    }
                    std::thread::yield_now();
                    for a in &got {
                        held.lock().unwrap().remove(a);
                    }
                    let release = Message::Release { addrs: got }.encode();
                    assert_eq!(exchange(&stream, &release), Message::Ok);
                }
            })
        })
        .collect();
    for t in clients {
        t.join().unwrap();
    }
    assert_eq!(c.registry().lock().unwrap().free_count(), 6);
    c.shutdown().unwrap();
}

#[test]
fn single_worker_reproduces_in_process_run() {
    let c = control();
    let s = eval_server(&c);
    let spec = sphere_spec(3);
    let parameter = Parameter::new(150).with_seed(12);
    let (remote_best, history) = async_optimize(&c.addr().to_string(), 1, &spec, &parameter).unwrap();

    let mut local = zeroth::bench::builtin_objective(&spec).unwrap();
    let local_best = opt_min(&mut local, &parameter.clone().with_algorithm(Algorithm::Sracos)).unwrap();

    let mut a: Vec<u64> = history.records().iter().map(|r| r.value.to_bits()).collect();
    let mut b: Vec<u64> = local.history().iter().map(|r| r.value.to_bits()).collect();
    a.sort_unstable();
    b.sort_unstable();
    assert_eq!(a, b);
    assert_eq!(remote_best.score(), local_best.score());
    s.shutdown().unwrap();
    c.shutdown().unwrap();
}

#[test]
fn several_workers_spend_exact_budget() {
    let c = control();
    let servers: Vec<_> = (0..4).map(|_| eval_server(&c)).collect();
    let spec = sphere_spec(4).with_param("delay_loops", 2000);
    for (n, budget) in [(1, 40), (2, 57), (3, 101), (4, 203)] {
        let mut client = AsyncClient::connect(&c.addr().to_string(), n, &spec, WAIT).unwrap();
        assert_eq!(client.servers().len(), n);
        client.optimize(&Parameter::new(budget).with_seed(n as u64)).unwrap();
        assert_eq!(client.history().len(), budget);
        assert_eq!(client.stats().max_update_depth, 1);
        assert_eq!(client.stats().collected, budget);
        client.close().unwrap();
    }
    for s in servers {
        s.shutdown().unwrap();
    }
    c.shutdown().unwrap();
}

#[test]
fn lost_worker_is_tolerated() {
    let c = control();
    let addr = c.addr().to_string();
    let flaky = flaky_worker(&addr, 5);
    let healthy = eval_server(&c);
    let mut client = AsyncClient::connect(&addr, 2, &sphere_spec(2), WAIT).unwrap();
    client.optimize(&Parameter::new(120).with_seed(3)).unwrap();
    assert_eq!(client.history().len(), 120);
    assert_eq!(client.stats().workers_lost, 1);
    assert_eq!(client.stats().redispatched, 1);
    client.close().unwrap();
    flaky.join().unwrap();
    healthy.shutdown().unwrap();
    c.shutdown().unwrap();
}

#[test]
fn losing_every_worker_is_an_error() {
    let c = control();
    let addr = c.addr().to_string();
    let flaky = flaky_worker(&addr, 10);
    let mut client = AsyncClient::connect(&addr, 1, &sphere_spec(2), WAIT).unwrap();
    match client.optimize(&Parameter::new(100).with_seed(3)) {
        Err(Error::WorkersLost { evaluations, best }) => {
            assert_eq!(evaluations, 10);
            assert!(best.is_some());
        }
        other => panic!("{other:?}"),
    }
    client.close().unwrap();
    flaky.join().unwrap();
    c.shutdown().unwrap();
}

#[test]
fn time_limit_stops_async_run() {
    let c = control();
    let s = eval_server(&c);
    let spec = sphere_spec(2).with_param("delay_loops", 2_000_000);
    let mut client = AsyncClient::connect(&c.addr().to_string(), 1, &spec, WAIT).unwrap();
    let p = Parameter::new(1_000_000).with_time_limit(Duration::from_millis(200));
    assert!(matches!(client.optimize(&p), Err(Error::TimeLimit { .. })));
    assert!(client.history().len() < 1_000_000);
    client.close().unwrap();
    s.shutdown().unwrap();
    c.shutdown().unwrap();
}

#[test]
fn servers_return_to_pool_after_session() {
    let c = control();
    let s = eval_server(&c);
    let addr = c.addr().to_string();
    for seed in 0..3 {
        let (_, h) = async_optimize(&addr, 1, &sphere_spec(2), &Parameter::new(30).with_seed(seed)).unwrap();
        assert_eq!(h.len(), 30);
    }
    s.shutdown().unwrap();
    c.shutdown().unwrap();
}
