#!/usr/bin/env node
/**
 * plot sweep --in sweep.csv --out figure.svg
 * plot convergence --in trace.csv --out figure.png --group gamma
 */

import { readFileSync } from 'fs'
import yargs from 'yargs'

import { TRACE_GROUP_KEYS, TraceGroupKey } from './aggregate'
import { plotConvergence, plotSweep } from './plots'
import { SchemaError } from './schema'

export function main(argv: string[]): number {
  let failure: string | null = null
  const parser = yargs(argv)
    .scriptName('plot')
    .usage('$0 <command> --in <csv> --out <image>')
    .command('sweep', 'line chart of mean total reward per solver', (cmd) =>
      cmd
        .option('in', { type: 'string', demandOption: true, describe: 'sweep CSV path' })
        .option('out', { type: 'string', demandOption: true, describe: 'output .svg or .png' })
        .option('axis', { type: 'string', describe: 'expected sweep axis (validated)' }),
    )
    .command('convergence', 'best-so-far curves grouped by a learning parameter', (cmd) =>
      cmd
        .option('in', { type: 'string', demandOption: true })
        .option('out', { type: 'string', demandOption: true })
        .option('group', {
          type: 'string',
          choices: [...TRACE_GROUP_KEYS],
          default: 'gamma' as TraceGroupKey,
        }),
    )
    .demandCommand(1, 'choose a command: sweep or convergence')
    .strict()
    .exitProcess(false)
    .fail((message) => {
      failure = message
    })

  const args = parser.parseSync()
  if (failure !== null) {
    console.error(`plot: usage error: ${failure}`)
    console.error('run with --help for details')
    return 2
  }

  const command = String(args._[0])
  try {
    const csvText = readFileSync(String(args.in), 'utf-8')
    if (command === 'sweep') {
      plotSweep(csvText, String(args.out), args.axis as string | undefined)
    } else {
      plotConvergence(csvText, String(args.out), args.group as TraceGroupKey)
    }
    console.log(`wrote ${args.out}`)
    return 0
  } catch (error) {
    if (error instanceof SchemaError || (error as NodeJS.ErrnoException).code === 'ENOENT') {
      console.error(`plot: error: ${(error as Error).message}`)
      return 1
    }
    throw error
  }
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)))
}
